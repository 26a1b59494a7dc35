// The (2,2)-split family Y^2 = X^6 - s1 X^4 + s2 X^2 - 1, its dihedral
// invariants (u, v) and the isogeny loci between its elliptic components.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "g2split/bipoly.hpp"
#include "g2split/exactmath.hpp"
#include "g2split/genus2.hpp"
#include "g2split/modular.hpp"

namespace g2split {

// j-invariant of y^2 = a3 x^3 + a2 x^2 + a1 x + a0.
template <class F>
F j_invariant_cubic(const UniPoly<F>& cubic) {
    if (cubic.degree() != 3) throw Error(ErrorKind::invalid_input, "j-invariant needs a cubic");
    const F& a3 = cubic.coeff(3);
    // x -> x / a3 and y -> y / a3 give a monic model with the same j.
    F a = cubic.coeff(2);
    F b = cubic.coeff(1) * a3;
    F c = cubic.coeff(0) * a3 * a3;
    F disc = a * a * b * b - from_int_like(a, 4) * b * b * b - from_int_like(a, 4) * a * a * a * c -
             from_int_like(a, 27) * c * c + from_int_like(a, 18) * a * b * c;
    if (is_zero(disc)) throw Error(ErrorKind::singular, "cubic has a repeated root");
    F k = a * a - from_int_like(a, 3) * b;
    return from_int_like(a, 256) * k * k * k / disc;
}

template <class F>
F delta_s(const F& s1, const F& s2) {
    return from_int_like(s1, 27) - from_int_like(s1, 18) * s1 * s2 - s1 * s1 * s2 * s2 +
           from_int_like(s1, 4) * s1 * s1 * s1 + from_int_like(s1, 4) * s2 * s2 * s2;
}

// Delta(u, v) = u^2 - 4v + 18u - 27; equals -delta_s on parametrized points.
template <class F>
F delta_uv(const F& u, const F& v) {
    return u * u - from_int_like(u, 4) * v + from_int_like(u, 18) * u - from_int_like(u, 27);
}

template <class F>
struct Split2Curve {
    F s1, s2;

    Split2Curve(F a, F b) : s1(std::move(a)), s2(std::move(b)) {
        if (is_zero(delta_s(s1, s2))) throw Error(ErrorKind::singular, "Delta_s = 0: singular (2,2) model");
    }
    // Y^2 = X^6 - s1 X^4 + s2 X^2 - 1.
    Genus2Curve<F> curve() const {
        F z = zero_like(s1), one = one_like(s1);
        return Genus2Curve<F>(UniPoly<F>({-one, z, s2, z, -s1, z, one}, z));
    }
    // E1: y^2 = x^3 - s1 x^2 + s2 x - 1; E2 (from y^2 = x (x^3 - s1 x^2 + s2 x - 1)
    // by x -> 1/x): y^2 = -x^3 + s2 x^2 - s1 x + 1.
    std::pair<UniPoly<F>, UniPoly<F>> elliptic_components() const {
        F z = zero_like(s1), one = one_like(s1);
        return {UniPoly<F>({-one, s2, -s1, one}, z), UniPoly<F>({one, -s1, s2, -one}, z)};
    }
    std::pair<F, F> j_invariants() const {
        F d = delta_s(s1, s2);
        F k1 = s1 * s1 - from_int_like(s1, 3) * s2;
        F k2 = s2 * s2 - from_int_like(s1, 3) * s1;
        return {from_int_like(s1, -256) * k1 * k1 * k1 / d, from_int_like(s1, -256) * k2 * k2 * k2 / d};
    }
};

template <class F>
struct DihedralInvariants {
    F u, v;
    bool operator==(const DihedralInvariants& o) const { return u == o.u && v == o.v; }
};

template <class F>
DihedralInvariants<F> dihedral_invariants(const F& s1, const F& s2) {
    if (is_zero(delta_s(s1, s2))) throw Error(ErrorKind::singular, "Delta_s = 0: singular (2,2) model");
    return {s1 * s2, s1 * s1 * s1 + s2 * s2 * s2};
}

namespace detail {
inline std::vector<Rational> field_cube_roots(const Rational& a) { return cube_roots(a); }
inline std::vector<Fp> field_cube_roots(const Fp& a) { return cube_roots(a); }
}  // namespace detail

// All (s1, s2) in the field with s1 s2 = u and s1^3 + s2^3 = v: s1^3, s2^3 are
// the roots of z^2 - v z + u^3. May be empty.
template <class F>
std::vector<std::pair<F, F>> uv_to_s1s2(const F& u, const F& v) {
    F disc = v * v - from_int_like(u, 4) * u * u * u;
    std::vector<std::pair<F, F>> out;
    if (!is_square(disc)) return out;
    F r = square_root(disc);
    F half = one_like(u) / from_int_like(u, 2);
    F z1 = (v + r) * half, z2 = (v - r) * half;
    for (const auto& [a, b] : {std::pair<F, F>{z1, z2}, std::pair<F, F>{z2, z1}})
        for (const F& s1 : detail::field_cube_roots(a))
            for (const F& s2 : detail::field_cube_roots(b)) {
                if (s1 * s2 != u) continue;
                std::pair<F, F> p{s1, s2};
                if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
            }
    return out;
}

// j^2 - s j + t = 0 with roots j1, j2.
template <class F>
struct JQuadratic {
    F s, t;
};

template <class F>
F split2_A(const F& u, const F& v) {
    return v * v - from_int_like(u, 2) * u * u * u + from_int_like(u, 54) * u * u - from_int_like(u, 9) * u * v -
           from_int_like(u, 27) * v;
}
template <class F>
F split2_B(const F& u, const F& v) {
    return u * u + from_int_like(u, 9) * u - from_int_like(u, 3) * v;
}

// s = 256 A / Delta, t = 65536 B^3 / Delta^2.
template <class F>
JQuadratic<F> j_quadratic(const F& u, const F& v) {
    F d = delta_uv(u, v);
    if (is_zero(d)) throw Error(ErrorKind::singular, "Delta(u, v) = 0");
    F b = split2_B(u, v);
    return {from_int_like(u, 256) * split2_A(u, v) / d, from_int_like(u, 65536) * b * b * b / (d * d)};
}
// The displayed constant term 65536 B / Delta^2.
template <class F>
JQuadratic<F> printed_j_quadratic(const F& u, const F& v) {
    F d = delta_uv(u, v);
    if (is_zero(d)) throw Error(ErrorKind::singular, "Delta(u, v) = 0");
    return {from_int_like(u, 256) * split2_A(u, v) / d, from_int_like(u, 65536) * split2_B(u, v) / (d * d)};
}

// S2 = A^2 - 4 B^3, so (j1 - j2)^2 Delta^2 = 65536 S2.
template <class F>
F s2_surface(const F& u, const F& v) {
    F a = split2_A(u, v), b = split2_B(u, v);
    return a * a - from_int_like(u, 4) * b * b * b;
}
const BiPoly<Integer>& printed_s2_poly();
template <class F>
F printed_s2(const F& u, const F& v) {
    return printed_s2_poly().eval_in(u, v);
}

// Both roots of the j-quadratic when S2 is a square in the field.
template <class F>
std::optional<std::pair<F, F>> j_pair_from_uv(const F& u, const F& v) {
    F d = delta_uv(u, v);
    if (is_zero(d)) throw Error(ErrorKind::singular, "Delta(u, v) = 0");
    F s2 = s2_surface(u, v);
    if (!is_square(s2)) return std::nullopt;
    JQuadratic<F> q = j_quadratic(u, v);
    F r = from_int_like(u, 256) * square_root(s2) / d;  // |j1 - j2|
    F half = one_like(u) / from_int_like(u, 2);
    return std::pair<F, F>{(q.s + r) * half, (q.s - r) * half};
}

enum class AutStratum { V4, D4, D6, boundary };
const char* to_string(AutStratum s);

template <class F>
AutStratum aut_stratum(const F& u, const F& v) {
    if (is_zero(delta_uv(u, v))) throw Error(ErrorKind::singular, "Delta(u, v) = 0");
    bool d4 = is_zero(v * v - from_int_like(u, 4) * u * u * u);
    bool d6 = is_zero(from_int_like(u, 4) * v - u * u + from_int_like(u, 110) * u - from_int_like(u, 1125));
    if (d4 && d6) return AutStratum::boundary;
    if (d4) return AutStratum::D4;
    if (d6) return AutStratum::D6;
    return AutStratum::V4;
}

// (j, j') = (256 w^3 / (w + 1), -16 (w - 15)^3 / (w + 1)^2).
template <class F>
std::pair<F, F> d4_pair(const F& w) {
    F w1 = w + one_like(w);
    if (is_zero(w1)) throw Error(ErrorKind::pole, "D4 pair has a pole at w = -1");
    F m = w - from_int_like(w, 15);
    return {from_int_like(w, 256) * w * w * w / w1, from_int_like(w, -16) * m * m * m / (w1 * w1)};
}

// Displayed isogeny-locus factors in (u, v).
const BiPoly<Integer>& printed_f1();
const BiPoly<Integer>& printed_f2();
const BiPoly<Integer>& d6_line();  // 4v - u^2 + 110u - 1125
const BiPoly<Integer>& printed_g1();
const BiPoly<Integer>& printed_g2();

// s and t of the j-quadratic as rational functions of (u, v).
std::pair<RationalParam, RationalParam> split2_st_params();
// phi_N(j1, j2) with Delta-powers cleared, Delta and content stripped.
BiPoly<Integer> split2_eliminated_locus(int N, LocusCache& cache = shared_locus_cache());

// Factors whose product is the N-isogeny locus: {f1, f2} for N = 2,
// {D6 line, g1, g2} for N = 3, the eliminated polynomial for N = 5, 7.
std::vector<BiPoly<Integer>> split2_isogeny_locus(int N, LocusCache& cache = shared_locus_cache());

template <class F>
std::vector<F> isogeny_locus_eval(int N, const F& u, const F& v, LocusCache& cache = shared_locus_cache()) {
    std::vector<F> out;
    for (const auto& f : split2_isogeny_locus(N, cache)) out.push_back(f.eval_in(u, v));
    return out;
}

}  // namespace g2split
