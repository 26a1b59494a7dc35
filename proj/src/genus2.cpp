#include "g2split/genus2.hpp"

namespace g2split {

namespace detail {
AffineTally tally_affine_fp_avx2(const std::vector<std::uint64_t>& coeffs, std::uint64_t p,
                                 const std::vector<std::uint8_t>& chi);
bool avx2_compiled();
}  // namespace detail

namespace {

constexpr std::uint64_t kKernelModulusLimit = std::uint64_t{1} << 26;

// chi[a] = 1 iff a is a nonzero square mod p.
std::vector<std::uint8_t> square_table(std::uint64_t p) {
    std::vector<std::uint8_t> chi(p, 0);
    for (std::uint64_t x = 1; x <= p / 2; ++x) chi[(x * x) % p] = 1;
    return chi;
}

AffineTally tally_scalar(const std::vector<std::uint64_t>& c, std::uint64_t p, const std::vector<std::uint8_t>& chi) {
    AffineTally t;
    const std::size_t n = c.size();
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = c[n - 1];
        for (std::size_t k = n - 1; k-- > 0;) acc = (acc * x + c[k]) % p;
        if (acc == 0)
            ++t.zeros;
        else
            t.squares += chi[acc];
    }
    return t;
}

void check_budget(std::uint64_t elements, std::uint64_t budget) {
    if (elements > budget)
        throw Error(ErrorKind::resource,
                    "point count over " + std::to_string(elements) + " elements exceeds budget " + std::to_string(budget));
}

}  // namespace

CountKernel best_count_kernel() {
#if defined(__x86_64__) || defined(__i386__)
    if (detail::avx2_compiled() && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return CountKernel::avx2;
#endif
    return CountKernel::scalar;
}

const char* to_string(CountKernel k) { return k == CountKernel::avx2 ? "avx2" : "scalar"; }

AffineTally tally_affine_fp(const std::vector<std::uint64_t>& coeffs, std::uint64_t p, CountKernel kernel) {
    if (coeffs.empty()) throw Error(ErrorKind::invalid_input, "empty polynomial");
    if (p >= kKernelModulusLimit) throw Error(ErrorKind::resource, "counting kernel needs p < 2^26");
    for (auto a : coeffs)
        if (a >= p) throw Error(ErrorKind::invalid_input, "coefficients must be reduced mod p");
    auto chi = square_table(p);
    if (kernel == CountKernel::avx2) {
        if (best_count_kernel() != CountKernel::avx2) throw Error(ErrorKind::unsupported, "AVX2 kernel unavailable on this CPU");
        return detail::tally_affine_fp_avx2(coeffs, p, chi);
    }
    return tally_scalar(coeffs, p, chi);
}

Integer count_points(const UniPoly<Fp>& f, CountKernel kernel, std::uint64_t budget) {
    if (f.degree() < 3 || f.degree() > 6) throw Error(ErrorKind::invalid_input, "point count needs 3 <= deg f <= 6");
    std::uint64_t p = f.lead().modulus();
    check_budget(p, budget);
    std::vector<std::uint64_t> c;
    for (const auto& a : f.coeffs()) c.push_back(a.value());
    AffineTally t = tally_affine_fp(c, p, kernel);
    Integer n = Integer(2) * Integer(static_cast<unsigned long>(t.squares)) + Integer(static_cast<unsigned long>(t.zeros));
    if (f.degree() % 2 == 1)
        n += 1;
    else if (legendre(f.lead()) == 1)
        n += 2;
    return n;
}

Integer count_points(const UniPoly<Fp>& f, std::uint64_t budget) { return count_points(f, best_count_kernel(), budget); }

UniPoly<Fp2> lift_to_fp2(const UniPoly<Fp>& f) {
    std::vector<Fp2> c;
    for (const auto& a : f.coeffs()) c.push_back(Fp2::from_base(a));
    return UniPoly<Fp2>(std::move(c), Fp2::from_base(f.zero()));
}

Integer count_points(const UniPoly<Fp2>& f, std::uint64_t budget) {
    if (f.degree() < 3 || f.degree() > 6) throw Error(ErrorKind::invalid_input, "point count needs 3 <= deg f <= 6");
    std::uint64_t p = f.lead().modulus();
    if (p > (std::uint64_t{1} << 31)) throw Error(ErrorKind::resource, "modulus too large for F_p^2 enumeration");
    check_budget(p * p, budget);
    std::uint64_t squares = 0, zeros = 0;
    const auto& c = f.coeffs();
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            Fp2 x(Fp(static_cast<std::int64_t>(a), p), Fp(static_cast<std::int64_t>(b), p));
            Fp2 acc = c.back();
            for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * x + c[k];
            if (acc.is_zero())
                ++zeros;
            else if (legendre(acc.norm()) == 1)
                ++squares;
        }
    Integer n = Integer(2) * Integer(static_cast<unsigned long>(squares)) + Integer(static_cast<unsigned long>(zeros));
    if (f.degree() % 2 == 1)
        n += 1;
    else if (is_square(f.lead()))
        n += 2;
    return n;
}

Integer count_points_quadratic(const UniPoly<Fp>& f, std::uint64_t budget) {
    if (f.degree() < 3 || f.degree() > 6) throw Error(ErrorKind::invalid_input, "point count needs 3 <= deg f <= 6");
    const std::uint64_t p = f.lead().modulus();
    if (p > (std::uint64_t{1} << 30)) throw Error(ErrorKind::resource, "modulus too large for F_p^2 enumeration");
    check_budget(p * p, budget);
    std::uint64_t n = 2;
    while (legendre(Fp(static_cast<std::int64_t>(n), p)) != -1) ++n;
    auto chi = square_table(p);
    std::vector<std::uint64_t> c;
    for (const auto& a : f.coeffs()) c.push_back(a.value());
    const std::size_t deg = c.size() - 1;
    std::uint64_t squares = 0, zeros = 0;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            // (A + B w)(a + b w) + c_k with w^2 = n
            std::uint64_t A = c[deg], B = 0;
            for (std::size_t k = deg; k-- > 0;) {
                std::uint64_t re = (A * a % p + (B * b % p) * n + c[k]) % p;
                std::uint64_t im = (A * b + B * a) % p;
                A = re;
                B = im;
            }
            if (A == 0 && B == 0) {
                ++zeros;
                continue;
            }
            std::uint64_t norm = (A * A % p + p - (B * B % p) * n % p) % p;
            squares += chi[norm];
        }
    Integer total = Integer(2) * Integer(static_cast<unsigned long>(squares)) + Integer(static_cast<unsigned long>(zeros));
    // Every element of F_p is a square in F_{p^2}.
    total += f.degree() % 2 == 1 ? 1 : 2;
    return total;
}

std::vector<Integer> LPolynomial::coefficients() const {
    if (genus == 1) return {Integer(1), c1, q};
    return {Integer(1), c1, c2, q * c1, q * q};
}

Integer LPolynomial::at_one() const {
    Integer s = 0;
    for (const auto& c : coefficients()) s += c;
    return s;
}

bool LPolynomial::operator==(const LPolynomial& o) const {
    return q == o.q && genus == o.genus && coefficients() == o.coefficients();
}

LPolynomial lpoly(const UniPoly<Fp>& f, std::uint64_t budget) {
    int d = f.degree();
    if (d < 3 || d > 6) throw Error(ErrorKind::invalid_input, "lpoly needs 3 <= deg f <= 6");
    if (is_zero(discriminant(f))) throw Error(ErrorKind::singular, "singular curve: disc f = 0");
    std::uint64_t p = f.lead().modulus();
    LPolynomial l;
    l.q = Integer(static_cast<unsigned long>(p));
    l.genus = (d - 1) / 2;
    Integer n1 = count_points(f, budget);
    l.c1 = n1 - (l.q + 1);
    if (l.genus == 2) {
        Integer n2 = count_points_quadratic(f, budget);
        Integer twice = n2 - (l.q * l.q + 1) + l.c1 * l.c1;
        if (twice % 2 != 0) throw Error(ErrorKind::integrity, "inconsistent point counts");
        l.c2 = twice / 2;
    }
    return l;
}

LPolynomial lpoly(const UniPoly<Fp2>& f, std::uint64_t budget) {
    int d = f.degree();
    if (d != 3 && d != 4) throw Error(ErrorKind::unsupported, "lpoly over F_p^2 is limited to elliptic curves");
    if (is_zero(discriminant(f))) throw Error(ErrorKind::singular, "singular curve: disc f = 0");
    std::uint64_t p = f.lead().modulus();
    LPolynomial l;
    l.q = Integer(static_cast<unsigned long>(p)) * Integer(static_cast<unsigned long>(p));
    l.genus = 1;
    l.c1 = count_points(f, budget) - (l.q + 1);
    return l;
}

bool tate_isogenous(const LPolynomial& a, const LPolynomial& b) {
    if (a.q != b.q) throw Error(ErrorKind::invalid_input, "L-polynomials over different fields are not comparable");
    return a == b;
}

bool tate_divides(const LPolynomial& a, const LPolynomial& b) {
    if (a.q != b.q) throw Error(ErrorKind::invalid_input, "L-polynomials over different fields are not comparable");
    auto to_poly = [](const LPolynomial& l) {
        std::vector<Rational> c;
        for (const auto& x : l.coefficients()) c.emplace_back(x);
        return UniPoly<Rational>(c, Rational(0));
    };
    return (to_poly(b) % to_poly(a)).is_zero();
}

std::vector<Integer> l_at_square(const LPolynomial& l) {
    std::vector<Integer> out;
    for (const auto& c : l.coefficients()) {
        if (!out.empty()) out.emplace_back(0);
        out.push_back(c);
    }
    return out;
}

std::string to_string(const LPolynomial& l) {
    auto c = l.coefficients();
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0) continue;
        if (!s.empty()) s += sgn(c[i]) < 0 ? " - " : " + ";
        else if (sgn(c[i]) < 0) s += "-";
        Integer a = abs(c[i]);
        if (i == 0 || a != 1) s += a.get_str();
        if (i > 0) s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return s;
}

}  // namespace g2split
