// The (3,3)-split family Y^2 = F1(X) F2(X) in parameters (fu, fv), the
// invariants (chi, psi) of the cubic pair, the degree-3 covers and the
// j-quadratic over k(chi, psi).
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "g2split/bipoly.hpp"
#include "g2split/exactmath.hpp"
#include "g2split/genus2.hpp"
#include "g2split/modular.hpp"
#include "g2split/split2.hpp"

namespace g2split {

// R = 27v + 4v^2 - u^2 v + 4u^3 - 18uv.
template <class F>
F split3_R(const F& u, const F& v) {
    return from_int_like(u, 27) * v + from_int_like(u, 4) * v * v - u * u * v + from_int_like(u, 4) * u * u * u -
           from_int_like(u, 18) * u * v;
}

template <class F>
struct CubicPairInvariants {
    F r1, r2;
    std::optional<F> r3;
};

// H(F, G) = a3 b0 - a2 b1 / 3 + a1 b2 / 3 - a0 b3.
template <class F>
F cubic_pairing(const UniPoly<F>& f, const UniPoly<F>& g) {
    F third = one_like(f.zero()) / from_int_like(f.zero(), 3);
    return f.coeff(3) * g.coeff(0) - third * f.coeff(2) * g.coeff(1) + third * f.coeff(1) * g.coeff(2) -
           f.coeff(0) * g.coeff(3);
}

// r1 = H^3 / R(F, G), r2 = H^4 / (D(F) D(G)), r3 = H^2 / J2(FG).
template <class F>
CubicPairInvariants<F> cubic_pair_invariants(const UniPoly<F>& f, const UniPoly<F>& g) {
    if (f.degree() != 3 || g.degree() != 3) throw Error(ErrorKind::invalid_input, "cubic pair expected");
    F h = cubic_pairing(f, g);
    F res = resultant(f, g);
    F dd = discriminant(f) * discriminant(g);
    if (is_zero(res) || is_zero(dd)) throw Error(ErrorKind::degenerate, "degenerate cubic pair");
    CubicPairInvariants<F> out{h * h * h / res, h * h * h * h / dd, std::nullopt};
    F j2 = igusa_from_clebsch(igusa_clebsch(f * g)).J2;
    if (!is_zero(j2)) out.r3 = h * h / j2;
    return out;
}

// (chi, psi) = (-3^6 r1, 2^8 3^8 r2): the normalization that makes the values
// agree with the closed forms in (fu, fv).
template <class F>
std::pair<F, F> chi_psi_from_cubics(const UniPoly<F>& f, const UniPoly<F>& g) {
    auto r = cubic_pair_invariants(f, g);
    return {from_int_like(f.zero(), -729) * r.r1, from_int_like(f.zero(), 1679616) * r.r2};
}

// V^2 = k f(X) W(X)^2 for a cover X -> E, (X, Y) -> (U(X), V).
template <class F>
struct Cover3 {
    RatFunc<F> U;
    F k;
    RatFunc<F> W;
};

template <class F>
class Split3Curve {
public:
    Split3Curve(F u, F v) : u_(std::move(u)), v_(std::move(v)) {
        if (is_zero(v_) || v_ == from_int_like(v_, 27)) throw Error(ErrorKind::singular, "fv must avoid 0 and 27");
        if (is_zero(split3_R(u_, v_))) throw Error(ErrorKind::singular, "R(fu, fv) = 0");
    }

    const F& u() const { return u_; }
    const F& v() const { return v_; }

    // F1 = v^2 X^3 + u v X^2 + v X + 1, F2 = 4 v^2 X^3 + v^2 X^2 + 2 v X + 1.
    std::pair<UniPoly<F>, UniPoly<F>> cubics() const {
        F one = one_like(u_), z = zero_like(u_);
        return {UniPoly<F>({one, v_, u_ * v_, v_ * v_}, z),
                UniPoly<F>({one, from_int_like(u_, 2) * v_, v_ * v_, from_int_like(u_, 4) * v_ * v_}, z)};
    }
    Genus2Curve<F> curve() const {
        auto [f1, f2] = cubics();
        return Genus2Curve<F>(f1 * f2);
    }
    // -16 v^17 (v - 27) R^3.
    F sextic_discriminant() const {
        F r = split3_R(u_, v_);
        return from_int_like(u_, -16) * power(v_, 17) * (v_ - from_int_like(u_, 27)) * r * r * r;
    }

    std::pair<F, F> chi_psi() const {
        F r = split3_R(u_, v_);
        F m = v_ - from_int_like(u_, 9) - from_int_like(u_, 2) * u_;
        F m3 = m * m * m;
        return {from_int_like(u_, 27) * v_ * m3 / r,
                from_int_like(u_, -1296) * v_ * m3 * m / ((v_ - from_int_like(u_, 27)) * r)};
    }

    // 4u - v - 9; the second cover needs it nonzero.
    F second_cover_factor() const { return from_int_like(u_, 4) * u_ - v_ - from_int_like(u_, 9); }

    // E1: R U^3 - (12u^2 - 2uv - 18v) U^2 + (12u - v) U - 4.
    UniPoly<F> elliptic_component1() const {
        auto k = [&](long n) { return from_int_like(u_, n); };
        const F &u = u_, &v = v_;
        return UniPoly<F>({k(-4), k(12) * u - v, -(k(12) * u * u - k(2) * u * v - k(18) * v), split3_R(u, v)}, k(0));
    }
    // E2: c3 U^3 + c2 U^2 + c1 U + c0.
    UniPoly<F> elliptic_component2() const {
        auto k = [&](long n) { return from_int_like(u_, n); };
        const F &u = u_, &v = v_;
        F w = require_second_cover();
        F a = k(9) * u - k(2) * v - k(27);
        F c0 = -(a * a * a);
        F c1 = w * (k(729) * u * u + k(54) * u * u * v - k(972) * u * v - k(18) * u * v * v + k(189) * v * v + k(729) * v +
                    v * v * v);
        F c2 = -v * w * w * (k(54) * u + u * v - k(27) * v);
        F c3 = v * v * w * w * w;
        return UniPoly<F>({c0, c1, c2, c3}, k(0));
    }
    std::pair<UniPoly<F>, UniPoly<F>> elliptic_components() const {
        return {elliptic_component1(), elliptic_component2()};
    }

    // j1 = 16 v P^3 / ((v - 27)^3 R^2), j2 = -256 (u^2 - 3v)^3 / (v R).
    std::pair<F, F> j_invariants() const {
        auto k = [&](long n) { return from_int_like(u_, n); };
        const F &u = u_, &v = v_;
        F r = split3_R(u, v);
        F p = v * u * u + k(216) * u * u - k(126) * v * u - k(972) * u + k(12) * v * v + k(405) * v;
        F d = v - k(27);
        F q = u * u - k(3) * v;
        return {k(16) * v * p * p * p / (d * d * d * r * r), k(-256) * q * q * q / (v * r)};
    }

    // The displayed covers.
    std::pair<Cover3<F>, Cover3<F>> printed_covers() const { return covers(false); }
    // Covers satisfying the curve equations: V1 = Y (v^2 X^3 - v X - 2) / F1^2
    // on the twist -V1^2 = E1(U1), and the constant of the V2 numerator is -1.
    std::pair<Cover3<F>, Cover3<F>> corrected_covers() const { return covers(true); }

private:
    F require_second_cover() const {
        F w = second_cover_factor();
        if (is_zero(w)) throw Error(ErrorKind::degenerate, "4 fu - fv - 9 = 0: second cover undefined");
        return w;
    }

    std::pair<Cover3<F>, Cover3<F>> covers(bool corrected) const {
        auto k = [&](long n) { return from_int_like(u_, n); };
        const F &u = u_, &v = v_;
        F z = k(0), one = k(1);
        auto [f1, f2] = cubics();
        UniPoly<F> X = UniPoly<F>::x(z);
        RatFunc<F> U1(X * X * UniPoly<F>::constant(v), f1);
        UniPoly<F> n1({k(-2), -v, z, v * v}, z);
        RatFunc<F> W1 = corrected ? RatFunc<F>(n1, f1 * f1) : RatFunc<F>(n1, f1);
        F w = require_second_cover();
        UniPoly<F> l = UniPoly<F>({k(3), v}, z);
        UniPoly<F> m({k(3) * u - v, v * w}, z);
        RatFunc<F> U2(l * l * m, f2.scale(v * w));
        UniPoly<F> q({corrected ? -one : one, -v, v * (v - k(4) * u), v * v * (v - k(4) * u + k(8))}, z);
        RatFunc<F> W2(q, f2 * f2);
        F c = k(27) - v;
        return {Cover3<F>{U1, corrected ? -one : one, W1}, Cover3<F>{U2, c * c * c, W2}};
    }

    F u_, v_;
};

// E(U) - k f W^2, i.e. the cover identity after substituting Y^2 = f.
template <class F>
RatFunc<F> cover_residual(const Cover3<F>& cover, const UniPoly<F>& e, const UniPoly<F>& f) {
    RatFunc<F> acc(UniPoly<F>::constant(e.lead()));
    for (int i = e.degree() - 1; i >= 0; --i) acc = acc * cover.U + RatFunc<F>(UniPoly<F>::constant(e.coeff(i)));
    return acc - RatFunc<F>(f).scale(cover.k) * cover.W * cover.W;
}

// Polynomials in (chi, psi) used below.
struct Split3Forms {
    BiPoly<Rational> s_num;      // s = s_num / (chi^4 psi^6)
    BiPoly<Rational> t_base;     // t = t_base^3 / (1296^3 chi^3 psi^9)
    BiPoly<Rational> s3;         // s^2 - 4t = s3 w^2 / (40310784^2 chi^8 psi^12)
    BiPoly<Rational> w;
    std::array<BiPoly<Rational>, 4> igusa;  // [J2 : J4 : J6 : J10]
    BiPoly<Integer> n2_genus0;   // genus-zero component of the N = 2 locus
    // The displayed forms.
    BiPoly<Rational> printed_s_num;  // s = printed_s_num / (2^24 psi^3 chi^8)
    BiPoly<Rational> printed_t_base; // t = -printed_t_base^3 / (2^36 chi^12 psi^3)
    BiPoly<Rational> printed_s3;
    std::array<BiPoly<Rational>, 4> printed_igusa;
    BiPoly<Integer> printed_n2_genus0;
};
const Split3Forms& split3_forms();

namespace detail {
template <class F>
void require_chi_psi(const F& chi, const F& psi) {
    if (is_zero(chi) || is_zero(psi)) throw Error(ErrorKind::pole, "chi psi = 0");
}
}  // namespace detail

template <class F>
JQuadratic<F> st_from_chipsi(const F& chi, const F& psi) {
    detail::require_chi_psi(chi, psi);
    const auto& fm = split3_forms();
    F c2 = chi * chi, p3 = psi * psi * psi;
    F tb = fm.t_base.eval_in(chi, psi);
    return {fm.s_num.eval_in(chi, psi) / (c2 * c2 * p3 * p3),
            tb * tb * tb / (from_int_like(chi, 2176782336L) * c2 * chi * p3 * p3 * p3)};
}

template <class F>
JQuadratic<F> printed_st_from_chipsi(const F& chi, const F& psi) {
    detail::require_chi_psi(chi, psi);
    const auto& fm = split3_forms();
    F s = fm.printed_s_num.eval_in(chi, psi) / (from_int_like(chi, 16777216) * power(psi, 3) * power(chi, 8));
    F tb = fm.printed_t_base.eval_in(chi, psi);
    F t = -(tb * tb * tb) / (convert_like(chi, Integer("68719476736")) * power(chi, 12) * power(psi, 3));
    return {s, t};
}

template <class F>
F s3_surface(const F& chi, const F& psi) {
    return split3_forms().s3.eval_in(chi, psi);
}
template <class F>
F s3_cofactor(const F& chi, const F& psi) {
    return split3_forms().w.eval_in(chi, psi);
}
template <class F>
F printed_s3(const F& chi, const F& psi) {
    return split3_forms().printed_s3.eval_in(chi, psi);
}

template <class F>
IgusaJ<F> igusa_from_chipsi(const F& chi, const F& psi) {
    detail::require_chi_psi(chi, psi);
    const auto& g = split3_forms().igusa;
    return {g[0].eval_in(chi, psi), g[1].eval_in(chi, psi), g[2].eval_in(chi, psi), g[3].eval_in(chi, psi)};
}
template <class F>
IgusaJ<F> printed_igusa_from_chipsi(const F& chi, const F& psi) {
    detail::require_chi_psi(chi, psi);
    const auto& g = split3_forms().printed_igusa;
    return {g[0].eval_in(chi, psi), g[1].eval_in(chi, psi), g[2].eval_in(chi, psi), g[3].eval_in(chi, psi)};
}

std::pair<RationalParam, RationalParam> split3_st_params();
BiPoly<Integer> split3_eliminated_locus(int N, LocusCache& cache = shared_locus_cache());
// N = 2: {genus-zero component, complementary factor}; N = 3, 5, 7: the
// eliminated polynomial.
std::vector<BiPoly<Integer>> split3_isogeny_locus(int N, LocusCache& cache = shared_locus_cache());

template <class F>
std::vector<F> isogeny_locus3_eval(int N, const F& chi, const F& psi, LocusCache& cache = shared_locus_cache()) {
    std::vector<F> out;
    for (const auto& f : split3_isogeny_locus(N, cache)) out.push_back(f.eval_in(chi, psi));
    return out;
}

}  // namespace g2split
