// Shioda-Inose quartic parameters, the affine Kummer model of E1 x E2 and the
// Inose pencil F^(s).
#pragma once

#include <array>
#include <vector>

#include "g2split/bipoly.hpp"
#include "g2split/exactmath.hpp"
#include "g2split/genus2.hpp"
#include "g2split/split2.hpp"
#include "g2split/split3.hpp"

namespace g2split {

template <class F>
struct ShiodaInoseParams {
    F alpha, beta, gamma, delta;

    std::vector<F> as_vector() const { return {alpha, beta, gamma, delta}; }
    bool operator==(const ShiodaInoseParams& o) const {
        return alpha == o.alpha && beta == o.beta && gamma == o.gamma && delta == o.delta;
    }
};

// Weights (4, 6, 10, 12), halved: a common lambda^2 is allowed.
inline const std::vector<int>& si_weights() {
    static const std::vector<int> w{2, 3, 5, 6};
    return w;
}

template <class F>
bool weighted_si_equal(const ShiodaInoseParams<F>& a, const ShiodaInoseParams<F>& b) {
    return weighted_equal(a.as_vector(), b.as_vector(), si_weights());
}

template <class F>
ShiodaInoseParams<F> si_from_igusa_clebsch(const IgusaClebsch<F>& ic) {
    if (is_zero(ic.I10)) throw Error(ErrorKind::singular, "I10 = 0");
    const F& z = ic.I2;
    auto q = [&](long n, long d) { return convert_like(z, make_rational(n, d)); };
    return {q(1, 4) * ic.I4, q(1, 8) * ic.I2 * ic.I4 - q(3, 8) * ic.I6, q(-243, 4) * ic.I10,
            q(243, 32) * ic.I2 * ic.I10};
}

template <class F>
ShiodaInoseParams<F> si_from_curve(const Genus2Curve<F>& c) {
    return si_from_igusa_clebsch(igusa_clebsch(c));
}

// (2,2) family in dihedral invariants.
template <class F>
ShiodaInoseParams<F> si_from_uv(const F& u, const F& v) {
    F d = delta_uv(u, v);
    if (is_zero(d)) throw Error(ErrorKind::singular, "Delta(u, v) = 0");
    auto k = [&](long n) { return from_int_like(u, n); };
    F u2 = u * u;
    return {u2 - k(126) * u + k(12) * v + k(405),
            -u2 * u - k(729) * u2 + k(36) * u * v - k(4131) * u + k(1404) * v + k(3645), -k(3888) * d * d,
            k(7776) * (k(15) + u) * d * d};
}

struct SurfaceForms {
    // The printed (chi, psi) parameters, each as one polynomial.
    std::array<BiPoly<Rational>, 4> printed_chipsi;
};
const SurfaceForms& surface_forms();

// (3,3) family: through the Igusa invariants in (chi, psi).
template <class F>
ShiodaInoseParams<F> si_from_chipsi(const F& chi, const F& psi) {
    auto ic = clebsch_from_igusa(igusa_from_chipsi(chi, psi));
    return si_from_igusa_clebsch(ic);
}

template <class F>
ShiodaInoseParams<F> printed_si_from_chipsi(const F& chi, const F& psi) {
    detail::require_chi_psi(chi, psi);
    const auto& g = surface_forms().printed_chipsi;
    return {g[0].eval_in(chi, psi), g[1].eval_in(chi, psi), g[2].eval_in(chi, psi), g[3].eval_in(chi, psi)};
}

// Variables [W, X, Y, Z] in that order.
enum QuarticVar : std::size_t { kW = 0, kX = 1, kY = 2, kZ = 3 };

// Y^2 Z W - 4 X^3 Z + 3 alpha X Z W^2 + beta Z W^3 + gamma X Z^2 W - (delta Z^2 W^2 + W^4) / 2.
template <class F>
MPoly<F, 4> si_quartic(const ShiodaInoseParams<F>& p) {
    const F& z = p.alpha;
    MPoly<F, 4> r(z);
    auto k = [&](long n, long d) { return convert_like(z, make_rational(n, d)); };
    auto term = [&](int w, int x, int y, int zz, const F& c) { r.add_term({w, x, y, zz}, c); };
    term(1, 0, 2, 1, k(1, 1));
    term(0, 3, 0, 1, k(-4, 1));
    term(2, 1, 0, 1, k(3, 1) * p.alpha);
    term(3, 0, 0, 1, p.beta);
    term(1, 1, 0, 2, p.gamma);
    term(2, 0, 0, 2, k(-1, 2) * p.delta);
    term(4, 0, 0, 0, k(-1, 2));
    return r;
}

template <class F>
F elliptic_discriminant(const F& a, const F& b) {
    return -from_int_like(a, 16) * (from_int_like(a, 4) * a * a * a + from_int_like(a, 27) * b * b);
}

// x2^3 + c x2 + d - t2^2 (x1^3 + a x1 + b) in variables [x1, x2, t2].
template <class F>
MPoly<F, 3> kummer_affine(const F& a, const F& b, const F& c, const F& d) {
    if (is_zero(elliptic_discriminant(a, b)) || is_zero(elliptic_discriminant(c, d)))
        throw Error(ErrorKind::singular, "elliptic factor with zero discriminant");
    MPoly<F, 3> r(a);
    F one = one_like(a);
    r.add_term({0, 3, 0}, one);
    r.add_term({0, 1, 0}, c);
    r.add_term({0, 0, 0}, d);
    r.add_term({3, 0, 2}, -one);
    r.add_term({1, 0, 2}, -a);
    r.add_term({0, 0, 2}, -b);
    return r;
}

// Short Weierstrass model y^2 = x^3 + A x + B.
template <class F>
struct WeierstrassCurve {
    F A, B;
    F discriminant() const { return elliptic_discriminant(A, B); }
    bool is_singular() const { return is_zero(discriminant()); }
};

template <class F>
struct InosePencil {
    F a, b, c, d;
    int s;
    F disc1, disc2;

    // Y^2 = X^3 - 3ac X + (disc1 t^s + 864 bd + disc2 / t^s) / 64.
    WeierstrassCurve<F> fiber(const F& t0) const {
        if (is_zero(t0)) throw Error(ErrorKind::pole, "fiber at t = 0");
        F ts = power(t0, static_cast<unsigned long>(s));
        F B = (disc1 * ts + from_int_like(a, 864) * b * d + disc2 / ts) / from_int_like(a, 64);
        return {-from_int_like(a, 3) * a * c, B};
    }

    // 64^2 t^(2s) times the fiber discriminant, as a polynomial in t.
    UniPoly<F> fiber_discriminant_numerator() const {
        F z = zero_like(a);
        std::vector<F> bn(static_cast<std::size_t>(2 * s + 1), z);
        bn[0] = disc2;
        bn[static_cast<std::size_t>(s)] = from_int_like(a, 864) * b * d;
        bn[static_cast<std::size_t>(2 * s)] = disc1;
        UniPoly<F> B64(bn, z);  // 64 t^s B
        F A = -from_int_like(a, 3) * a * c;
        std::vector<F> an(static_cast<std::size_t>(2 * s + 1), z);
        an[static_cast<std::size_t>(2 * s)] = from_int_like(a, 4 * 4096) * A * A * A;
        return (UniPoly<F>(an, z) + B64 * B64 * UniPoly<F>::constant(from_int_like(a, 27))) *
               UniPoly<F>::constant(from_int_like(a, -16));
    }
};

template <class F>
InosePencil<F> inose_pencil(const F& a, const F& b, const F& c, const F& d, int s) {
    if (s < 1 || s > 6) throw Error(ErrorKind::domain, "Inose pencil index must be in 1..6");
    F d1 = elliptic_discriminant(a, b), d2 = elliptic_discriminant(c, d);
    if (is_zero(d1) || is_zero(d2)) throw Error(ErrorKind::singular, "elliptic factor with zero discriminant");
    return {a, b, c, d, s, d1, d2};
}

}  // namespace g2split
