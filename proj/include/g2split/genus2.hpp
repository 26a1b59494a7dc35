// Genus-2 curves y^2 = f(x): invariants, Mumford/Cantor arithmetic,
// point counting and L-polynomials.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2split/exactmath.hpp"
#include "g2split/poly.hpp"

namespace g2split {

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

template <class F>
class Genus2Curve {
public:
    // f of degree 5 or 6 with nonzero discriminant.
    explicit Genus2Curve(UniPoly<F> f) : f_(std::move(f)) {
        if (f_.degree() != 5 && f_.degree() != 6)
            throw Error(ErrorKind::invalid_input, "genus-2 model needs deg f in {5, 6}");
        if (is_zero(discriminant(f_))) throw Error(ErrorKind::singular, "singular curve: disc f = 0");
    }
    static Genus2Curve from_coeffs(const std::vector<F>& a) { return Genus2Curve(UniPoly<F>(a, a.at(0))); }

    const UniPoly<F>& f() const { return f_; }
    int degree() const { return f_.degree(); }
    // a_i with a_6 = 0 for quintic models.
    F a(int i) const { return f_.coeff(i); }

private:
    UniPoly<F> f_;
};

template <class F>
struct IgusaClebsch {
    F I2, I4, I6, I10;
};

template <class F>
struct IgusaJ {
    F J2, J4, J6, J10;
};

namespace detail {

struct Monomial2 {
    std::array<int, 2> idx;
    long c;
};
struct Monomial4 {
    std::array<int, 4> idx;
    long c;
};
struct Monomial6 {
    std::array<int, 6> idx;
    long c;
};

extern const std::array<Monomial2, 4> kI2;
extern const std::array<Monomial4, 16> kI4;
extern const std::array<Monomial6, 56> kI6;

template <class F, std::size_t K, class M, std::size_t N>
F eval_table(const std::array<M, N>& table, const std::array<F, 7>& a) {
    F acc = zero_like(a[0]);
    for (const auto& m : table) {
        F term = from_int_like(a[0], m.c);
        for (std::size_t k = 0; k < K; ++k) term = term * a[static_cast<std::size_t>(m.idx[k])];
        acc = acc + term;
    }
    return acc;
}

}  // namespace detail

// Igusa-Clebsch invariants of the binary sextic a6 x^6 + ... + a0 (a quintic
// model is the sextic with a6 = 0). I10 is the discriminant of the sextic form.
template <class F>
IgusaClebsch<F> igusa_clebsch(const UniPoly<F>& f) {
    if (f.degree() < 5 || f.degree() > 6) throw Error(ErrorKind::invalid_input, "binary sextic expected");
    std::array<F, 7> a;
    for (int i = 0; i <= 6; ++i) a[static_cast<std::size_t>(i)] = f.coeff(i);
    IgusaClebsch<F> ic;
    ic.I2 = detail::eval_table<F, 2>(detail::kI2, a);
    ic.I4 = detail::eval_table<F, 4>(detail::kI4, a);
    ic.I6 = detail::eval_table<F, 6>(detail::kI6, a);
    if (f.degree() == 6) {
        ic.I10 = discriminant(f);
    } else {
        ic.I10 = a[5] * a[5] * discriminant(f);
    }
    if (is_zero(ic.I10)) throw Error(ErrorKind::singular, "singular curve: I10 = 0");
    return ic;
}

template <class F>
IgusaClebsch<F> igusa_clebsch(const Genus2Curve<F>& c) {
    return igusa_clebsch(c.f());
}

template <class F>
IgusaJ<F> igusa_from_clebsch(const IgusaClebsch<F>& ic) {
    const F& z = ic.I2;
    auto k = [&](long n) { return from_int_like(z, n); };
    if (is_zero(k(6)))
        throw Error(ErrorKind::unsupported, "Igusa J conversion needs characteristic not in {2, 3}");
    IgusaJ<F> j;
    j.J2 = exact_div(ic.I2, k(8));
    j.J4 = exact_div(k(4) * j.J2 * j.J2 - ic.I4, k(96));
    j.J6 = exact_div(k(8) * j.J2 * j.J2 * j.J2 - k(160) * j.J2 * j.J4 - ic.I6, k(576));
    j.J10 = exact_div(ic.I10, k(4096));
    return j;
}

template <class F>
IgusaClebsch<F> clebsch_from_igusa(const IgusaJ<F>& j) {
    const F& z = j.J2;
    auto k = [&](long n) { return from_int_like(z, n); };
    IgusaClebsch<F> ic;
    ic.I2 = k(8) * j.J2;
    ic.I4 = k(4) * j.J2 * j.J2 - k(96) * j.J4;
    ic.I6 = k(8) * j.J2 * j.J2 * j.J2 - k(160) * j.J2 * j.J4 - k(576) * j.J6;
    ic.I10 = k(4096) * j.J10;
    return ic;
}

template <class F>
IgusaJ<F> igusa_j(const Genus2Curve<F>& c) {
    return igusa_from_clebsch(igusa_clebsch(c));
}

// True iff some lambda in the algebraic closure has b_i = lambda^{w_i} a_i for
// all i: same zero pattern and a_i^{w_j} b_j^{w_i} = b_i^{w_j} a_j^{w_i}.
template <class F>
bool weighted_equal(const std::vector<F>& a, const std::vector<F>& b, const std::vector<int>& w) {
    if (a.size() != b.size() || a.size() != w.size()) throw Error(ErrorKind::invalid_input, "weighted tuples differ in length");
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i]) != is_zero(b[i])) return false;
        if (!is_zero(a[i])) nz.push_back(i);
    }
    for (std::size_t x = 0; x < nz.size(); ++x)
        for (std::size_t y = x + 1; y < nz.size(); ++y) {
            std::size_t i = nz[x], j = nz[y];
            auto wi = static_cast<unsigned long>(w[i]), wj = static_cast<unsigned long>(w[j]);
            if (power(a[i], wj) * power(b[j], wi) != power(b[i], wj) * power(a[j], wi)) return false;
        }
    return true;
}

template <class F>
bool weighted_equal(const IgusaJ<F>& a, const IgusaJ<F>& b) {
    if (is_zero(a.J10) || is_zero(b.J10)) throw Error(ErrorKind::invalid_input, "weighted_equal needs J10 != 0");
    return weighted_equal<F>({a.J2, a.J4, a.J6, a.J10}, {b.J2, b.J4, b.J6, b.J10}, {1, 2, 3, 5});
}

// Weight-0 absolute invariants J2^5/J10, J2^3 J4/J10, J2^2 J6/J10.
template <class F>
std::array<F, 3> absolute_invariants(const IgusaJ<F>& j) {
    return {exact_div(power(j.J2, 5), j.J10), exact_div(power(j.J2, 3) * j.J4, j.J10),
            exact_div(j.J2 * j.J2 * j.J6, j.J10)};
}

// ---------------------------------------------------------------------------
// Mumford representation and Cantor's algorithm (y^2 = f(x), deg f = 5)
// ---------------------------------------------------------------------------

template <class F>
struct MumfordDivisor {
    UniPoly<F> u;
    UniPoly<F> v;

    static MumfordDivisor identity(const F& like) {
        return {UniPoly<F>::constant(one_like(like)), UniPoly<F>(like)};
    }
    bool is_identity() const { return u.degree() == 0; }
    bool operator==(const MumfordDivisor& o) const { return u == o.u && v == o.v; }
    bool operator!=(const MumfordDivisor& o) const { return !(*this == o); }
};

template <class F>
bool is_valid_divisor(const MumfordDivisor<F>& d, const UniPoly<F>& f) {
    if (d.u.is_zero() || !(d.u.lead() == one_like(d.u.lead()))) return false;
    if (d.u.degree() > 2 || d.v.degree() >= d.u.degree()) return false;
    return (d.v * d.v - f).divmod(d.u).second.is_zero();
}

template <class F>
void require_quintic(const Genus2Curve<F>& c) {
    if (c.degree() != 5)
        throw Error(ErrorKind::unsupported, "Jacobian arithmetic is implemented for quintic models (one point at infinity)");
}

template <class F>
MumfordDivisor<F> negate(const MumfordDivisor<F>& d) {
    return {d.u, -d.v};
}

// Divisor of a single affine point (x0, y0).
template <class F>
MumfordDivisor<F> point_divisor(const F& x0, const F& y0, const Genus2Curve<F>& c) {
    if (c.f()(x0) != y0 * y0) throw Error(ErrorKind::invalid_input, "point is not on the curve");
    return {UniPoly<F>::linear_root(x0), UniPoly<F>::constant(y0)};
}

template <class F>
MumfordDivisor<F> cantor_reduce(UniPoly<F> u, UniPoly<F> v, const UniPoly<F>& f) {
    v = v % u;
    while (u.degree() > 2) {
        UniPoly<F> u2 = (f - v * v).divexact(u);
        u = u2.monic();
        v = (-v) % u;
    }
    u = u.monic();
    v = v % u;
    return {u, v};
}

template <class F>
MumfordDivisor<F> cantor_add(const MumfordDivisor<F>& d1, const MumfordDivisor<F>& d2, const Genus2Curve<F>& c) {
    require_quintic(c);
    const UniPoly<F>& f = c.f();
    auto e1 = extended_gcd(d1.u, d2.u);  // d = e1.s u1 + e1.t u2
    auto e2 = extended_gcd(e1.g, d1.v + d2.v);
    const UniPoly<F>& d = e2.g;
    UniPoly<F> s1 = e2.s * e1.s, s2 = e2.s * e1.t, s3 = e2.t;
    UniPoly<F> u = (d1.u * d2.u).divexact(d * d);
    UniPoly<F> v = (s1 * d1.u * d2.v + s2 * d2.u * d1.v + s3 * (d1.v * d2.v + f)).divexact(d);
    return cantor_reduce(u, v % u, f);
}

template <class F>
MumfordDivisor<F> scalar_mul(const Integer& n, const MumfordDivisor<F>& d, const Genus2Curve<F>& c) {
    MumfordDivisor<F> base = sgn(n) < 0 ? negate(d) : d;
    Integer k = abs(n);
    MumfordDivisor<F> acc = MumfordDivisor<F>::identity(c.f().zero());
    std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = cantor_add(acc, acc, c);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = cantor_add(acc, base, c);
    }
    return acc;
}

template <class F>
struct GeometricSum {
    MumfordDivisor<F> divisor;
    bool fell_back = false;  // delegated to cantor_add
    std::string note;
};

namespace detail {

// Roots of a monic polynomial of degree <= 2 in the base field, if it splits
// into distinct linear factors.
template <class F>
std::optional<std::vector<F>> split_roots(const UniPoly<F>& u) {
    if (u.degree() == 0) return std::vector<F>{};
    if (u.degree() == 1) return std::vector<F>{-u.coeff(0)};
    const F& b = u.coeff(1);
    const F& c0 = u.coeff(0);
    F two = from_int_like(b, 2);
    F disc = b * b - from_int_like(b, 4) * c0;
    if (is_zero(disc) || !is_square(disc)) return std::nullopt;
    F r = square_root(disc);
    return std::vector<F>{exact_div(-b + r, two), exact_div(-b - r, two)};
}

// Lagrange interpolation through (xs[i], ys[i]).
template <class F>
UniPoly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys, const F& like) {
    UniPoly<F> acc(like);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UniPoly<F> basis = UniPoly<F>::constant(one_like(like));
        F denom = one_like(like);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly<F>::linear_root(xs[j]);
            denom = denom * (xs[i] - xs[j]);
        }
        acc = acc + basis.scale(exact_div(ys[i], denom));
    }
    return acc;
}

}  // namespace detail

// Quadratic with roots x5, x6 for the cubic g through four points with
// abscissae xs on y^2 = f, deg f = 5. The displayed form
// x^2 + (sum x_i) x + (b3^2 - a5) / (b0^2 prod x_i) and the form read off
// from g^2 - f = b0^2 prod (x - x_i).
template <class F>
UniPoly<F> printed_geometric_quadratic(const std::vector<F>& xs, const UniPoly<F>& g, const UniPoly<F>& f) {
    F sum = zero_like(f.zero()), prod = one_like(f.zero());
    for (const F& x : xs) {
        sum = sum + x;
        prod = prod * x;
    }
    F b0 = g.coeff(3), b3 = g.coeff(0);
    return UniPoly<F>({(b3 * b3 - f.coeff(5)) / (b0 * b0 * prod), sum, one_like(sum)}, f.zero());
}
template <class F>
UniPoly<F> geometric_quadratic(const std::vector<F>& xs, const UniPoly<F>& g, const UniPoly<F>& f) {
    F sum = zero_like(f.zero()), prod = one_like(f.zero());
    for (const F& x : xs) {
        sum = sum + x;
        prod = prod * x;
    }
    F b0 = g.coeff(3), b1 = g.coeff(2), b3 = g.coeff(0);
    F lin = (from_int_like(b0, 2) * b0 * b1 - f.coeff(5)) / (b0 * b0) + sum;
    return UniPoly<F>({(b3 * b3 - f.coeff(0)) / (b0 * b0 * prod), lin, one_like(sum)}, f.zero());
}

// Addition through the interpolating curve: the polynomial g through the
// (at most four) affine points meets y^2 = f in the remaining points, whose
// negation is the sum. Falls back to cantor_add when the points are not
// rational and pairwise distinct in x.
template <class F>
GeometricSum<F> geometric_add(const MumfordDivisor<F>& d1, const MumfordDivisor<F>& d2, const Genus2Curve<F>& c) {
    require_quintic(c);
    const UniPoly<F>& f = c.f();
    const F z = f.zero();
    auto fallback = [&](const char* why) {
        return GeometricSum<F>{cantor_add(d1, d2, c), true, why};
    };
    auto r1 = detail::split_roots(d1.u);
    auto r2 = detail::split_roots(d2.u);
    if (!r1 || !r2) return fallback("support not split into distinct rational points");
    std::vector<F> xs, ys;
    for (const F& x : *r1) {
        xs.push_back(x);
        ys.push_back(d1.v(x));
    }
    for (const F& x : *r2) {
        for (const F& e : xs)
            if (e == x) return fallback("shared x-coordinate");
        xs.push_back(x);
        ys.push_back(d2.v(x));
    }
    if (xs.empty()) return {MumfordDivisor<F>::identity(z), false, ""};
    UniPoly<F> g = detail::interpolate(xs, ys, z);
    if (xs.size() <= 2) {
        UniPoly<F> u = UniPoly<F>::constant(one_like(z));
        for (const F& x : xs) u = u * UniPoly<F>::linear_root(x);
        return {MumfordDivisor<F>{u, g % u}, false, ""};
    }
    UniPoly<F> known = UniPoly<F>::constant(one_like(z));
    for (const F& x : xs) known = known * UniPoly<F>::linear_root(x);
    UniPoly<F> rest = (g * g - f).divexact(known);
    if (rest.degree() <= 0) return {MumfordDivisor<F>::identity(z), false, ""};
    UniPoly<F> u3 = rest.monic();
    UniPoly<F> v3 = (-g) % u3;
    return {MumfordDivisor<F>{u3, v3}, false, ""};
}

// ---------------------------------------------------------------------------
// Point counting and L-polynomials
// ---------------------------------------------------------------------------

// Largest number of field elements a single count may enumerate.
inline constexpr std::uint64_t kDefaultCountBudget = std::uint64_t{1} << 24;

enum class CountKernel { scalar, avx2 };
CountKernel best_count_kernel();  // runtime CPU dispatch
const char* to_string(CountKernel k);

// Number of x in F_p with f(x) a nonzero square, and with f(x) = 0.
struct AffineTally {
    std::uint64_t squares = 0;
    std::uint64_t zeros = 0;
};
// coeffs[i] is the coefficient of x^i, reduced mod p; p < 2^26.
AffineTally tally_affine_fp(const std::vector<std::uint64_t>& coeffs, std::uint64_t p, CountKernel kernel);

// Projective points of y^2 = f(x) over F_p (deg f in 3..6; the smooth model
// has two points at infinity for even degree with square leading coefficient,
// none for a nonsquare, one for odd degree).
Integer count_points(const UniPoly<Fp>& f, std::uint64_t budget = kDefaultCountBudget);
Integer count_points(const UniPoly<Fp>& f, CountKernel kernel, std::uint64_t budget = kDefaultCountBudget);
// Over F_{p^2}: coefficients given in F_{p^2} (F_p models via Fp2::from_base).
Integer count_points(const UniPoly<Fp2>& f, std::uint64_t budget = kDefaultCountBudget);
UniPoly<Fp2> lift_to_fp2(const UniPoly<Fp>& f);
// Over F_{p^2} for any odd p, for a model defined over F_p; uses
// F_p(sqrt(n)) with n the least nonresidue.
Integer count_points_quadratic(const UniPoly<Fp>& f, std::uint64_t budget = kDefaultCountBudget);

struct LPolynomial {
    Integer q;
    int genus = 0;
    Integer c1;
    Integer c2;  // genus 2 only

    // Coefficients of L(t) from t^0 upward.
    std::vector<Integer> coefficients() const;
    Integer at_one() const;  // #Jac(F_q)
    bool operator==(const LPolynomial& o) const;
};

// Genus read off from deg f (3,4 -> 1; 5,6 -> 2).
LPolynomial lpoly(const UniPoly<Fp>& f, std::uint64_t budget = kDefaultCountBudget);
// Elliptic curves over F_{p^2} only.
LPolynomial lpoly(const UniPoly<Fp2>& f, std::uint64_t budget = kDefaultCountBudget);

// Tate: isogenous over F_q iff L-polynomials agree.
bool tate_isogenous(const LPolynomial& a, const LPolynomial& b);
// L_a(t) divides L_b(t) in Z[t].
bool tate_divides(const LPolynomial& a, const LPolynomial& b);
// Coefficients of L(t^2) as a polynomial in t over F_{sqrt q}.
std::vector<Integer> l_at_square(const LPolynomial& l);
std::string to_string(const LPolynomial& l);

}  // namespace g2split
