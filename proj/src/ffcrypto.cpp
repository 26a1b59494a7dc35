#include "g2split/ffcrypto.hpp"

#include <future>
#include <sstream>

namespace g2split {

Fp2 make_alpha(std::uint64_t p, std::uint64_t alpha0, std::uint64_t alpha1) {
    require_odd_prime(p);
    if (p % 4 != 3) throw Error(ErrorKind::invalid_input, "Montgomery lift needs p = 3 mod 4");
    return Fp2(Fp(static_cast<std::int64_t>(alpha0 % p), p), Fp(static_cast<std::int64_t>(alpha1 % p), p));
}

UniPoly<Fp2> montgomery_cubic(const Fp2& alpha) {
    Fp2 one = one_like(alpha), z = zero_like(alpha);
    if (alpha.is_zero()) throw Error(ErrorKind::degenerate, "alpha = 0");
    if (alpha * alpha == one) throw Error(ErrorKind::degenerate, "alpha^2 = 1 (alpha = 1/alpha)");
    Fp2 inv = alpha.inverse();
    UniPoly<Fp2> x({z, one}, z);
    return x * (x - UniPoly<Fp2>::constant(alpha)) * (x - UniPoly<Fp2>::constant(inv));
}

LiftedCurve lift_to_genus2(const Fp2& alpha) {
    const Fp& a0 = alpha.re();
    const Fp& a1 = alpha.im();
    std::uint64_t p = alpha.modulus();
    if (a1.is_zero()) throw Error(ErrorKind::degenerate, "alpha1 = 0 (alpha in F_p)");
    if (a0.is_zero()) throw Error(ErrorKind::degenerate, "alpha0 = 0 (f1 = f2)");
    Fp n = a0 * a0 + a1 * a1, one(1, p), two(2, p), z(0, p);
    if ((n + one).is_zero()) throw Error(ErrorKind::degenerate, "alpha0^2 + alpha1^2 + 1 = 0 (pole in f3)");
    Fp k1 = two * a0 / a1;
    Fp k3 = two * a0 * (n - one) / (a1 * (n + one));
    LiftedCurve c{UniPoly<Fp>({-one, k1, one}, z), UniPoly<Fp>({-one, -k1, one}, z), UniPoly<Fp>({-one, -k3, one}, z)};
    if (discriminant(c.sextic()).is_zero()) throw Error(ErrorKind::degenerate, "disc(f1 f2 f3) = 0");
    return c;
}

SupersingularityReport is_supersingular(const UniPoly<Fp2>& cubic, std::uint64_t budget) {
    std::uint64_t p = cubic.lead().modulus();
    Integer q = Integer(static_cast<unsigned long>(p));
    SupersingularityReport r;
    r.count = count_points(cubic, budget);
    r.trace = q * q + 1 - r.count;
    r.supersingular = r.count == (q + 1) * (q + 1);
    r.trace_divisible = r.trace % q == 0;
    return r;
}

RestrictionRow verify_restriction_isogeny(const Fp2& alpha, std::uint64_t budget) {
    RestrictionRow row;
    row.p = alpha.modulus();
    row.alpha0 = alpha.re().value();
    row.alpha1 = alpha.im().value();
    std::optional<UniPoly<Fp2>> cubic;
    std::optional<LiftedCurve> lift;
    try {
        cubic = montgomery_cubic(alpha);
        row.le = lpoly(*cubic, budget);
        row.supersingular = is_supersingular(*cubic, budget).supersingular;
        lift = lift_to_genus2(alpha);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::degenerate) throw;
        row.reason = e.what();
        return row;
    }
    row.valid = true;
    row.lx = lpoly(lift->sextic(), budget);
    row.lemma_holds = row.lx->coefficients() == l_at_square(*row.le);
    return row;
}

std::vector<RestrictionRow> ss_scan(std::uint64_t p, std::optional<std::size_t> limit, unsigned workers) {
    make_alpha(p, 0, 1);  // validates p
    if (p > (std::uint64_t{1} << 16) || p * p > kDefaultCountBudget)
        throw Error(ErrorKind::resource, "F_{p^2} enumeration for p = " + std::to_string(p) + " exceeds the count budget");
    std::size_t total = static_cast<std::size_t>(p * (p - 1));
    std::size_t n = limit ? std::min(*limit, total) : total;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> alphas;
    for (std::size_t i = 0; i < n; ++i) alphas.emplace_back(i / (p - 1), i % (p - 1) + 1);

    std::vector<RestrictionRow> rows(alphas.size());
    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            rows[i] = verify_restriction_isogeny(make_alpha(p, alphas[i].first, alphas[i].second));
    };
    std::size_t w = std::max(1u, workers);
    std::size_t chunk = (alphas.size() + w - 1) / w;
    std::vector<std::future<void>> jobs;
    for (std::size_t b = 0; b < alphas.size(); b += chunk)
        jobs.push_back(std::async(w == 1 ? std::launch::deferred : std::launch::async, run, b,
                                  std::min(alphas.size(), b + chunk)));
    for (auto& j : jobs) j.get();
    return rows;
}

std::string scan_csv_header() { return "p,alpha0,alpha1,valid,reason,supersingular,lemma_holds,LX_c1,LX_c2,LE_c1"; }

std::string to_csv(const RestrictionRow& r) {
    std::ostringstream os;
    auto b = [](bool x) { return x ? "true" : "false"; };
    os << r.p << ',' << r.alpha0 << ',' << r.alpha1 << ',' << b(r.valid) << ",\"" << r.reason << "\","
       << b(r.supersingular) << ',' << b(r.lemma_holds) << ',';
    if (r.lx) os << r.lx->c1.get_str() << ',' << r.lx->c2.get_str();
    else os << ',';
    os << ',';
    if (r.le) os << r.le->c1.get_str();
    return os.str();
}

std::pair<Fp, Fp> weil_restriction_forms(const Fp2& alpha, const Fp2& delta, const Fp& x0, const Fp& x1,
                                         const Fp& y0, const Fp& y1) {
    std::uint64_t p = alpha.modulus();
    const Fp &a0 = alpha.re(), &a1 = alpha.im(), &d0 = delta.re(), &d1 = delta.im();
    Fp one(1, p), two(2, p), three(3, p);
    Fp n = a0 * a0 + a1 * a1;
    Fp dx = x0 * x0 - x1 * x1, dy = y0 * y0 - y1 * y1;
    Fp cubic = x0 * (x0 * x0 - three * x1 * x1 + one);
    Fp w0 = n * (a0 * dx - two * a1 * x0 * x1 + d0 * dy - two * d1 * y0 * y1 - cubic) + a0 * dx + two * a1 * x0 * x1;
    Fp w1 = n * (a1 * dx - two * a0 * x0 * x1 + d1 * dy - two * d0 * y0 * y1 - cubic) + a1 * dx + two * a0 * x0 * x1;
    return {w0, w1};
}

}  // namespace g2split
