#include <random>

#include "doctest.h"
#include "g2split/split3.hpp"

using namespace g2split;

namespace {
Rational rq(long a, long b) { return make_rational(a, b); }

// Random admissible (fu, fv) with small height.
std::pair<Rational, Rational> random_uv(std::mt19937_64& rng, bool need_second = true) {
    for (;;) {
        Rational u = make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5) + 1);
        Rational v = make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5) + 1);
        if (v == 0 || v == 27 || split3_R(u, v) == 0) continue;
        if (need_second && 4 * u - v - 9 == 0) continue;
        if (v - 9 - 2 * u == 0) continue;  // chi = psi = 0
        return {u, v};
    }
}
}  // namespace

TEST_CASE("cubic pair invariants and (chi, psi)") {
    Split3Curve<Rational> c(Rational(1), Rational(1));
    auto [chi, psi] = c.chi_psi();
    CHECK(chi == rq(-3375, 2));
    CHECK(psi == rq(405000, 13));
    auto [f1, f2] = c.cubics();
    auto alt = chi_psi_from_cubics(f1, f2);
    CHECK(alt.first == chi);
    CHECK(alt.second == psi);
    auto r = cubic_pair_invariants(f1, f2);
    CHECK(r.r1 == rq(125, 54));
    CHECK(r.r3.has_value());

    auto z = Split3Curve<Rational>(Rational(1), Rational(11)).chi_psi();
    CHECK(z.first == 0);
    CHECK(z.second == 0);

    UniPoly<Rational> e({-1, 0, 0, 1}, Rational(0));
    CHECK(cubic_pairing(e, e) == 0);
    CHECK_THROWS_AS(cubic_pair_invariants(e, e), Error);

    // GL2 action: x -> x + 1 and x -> 2x.
    UniPoly<Rational> f({3, -1, 2, 5}, Rational(0)), g({-7, 4, 0, 1}, Rational(0));
    auto base = cubic_pair_invariants(f, g);
    for (const auto& sub : {UniPoly<Rational>({1, 1}, Rational(0)), UniPoly<Rational>({0, 2}, Rational(0))}) {
        auto moved = cubic_pair_invariants(f.compose(sub), g.compose(sub));
        CHECK(moved.r1 == base.r1);
        CHECK(moved.r2 == base.r2);
        CHECK(*moved.r3 == *base.r3);
    }
    auto swapped = cubic_pair_invariants(g, f);
    CHECK(swapped.r1 == base.r1);
    CHECK(swapped.r2 == base.r2);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        auto [u, v] = random_uv(rng, false);
        Split3Curve<Rational> x(u, v);
        auto [a, b] = x.cubics();
        auto closed = x.chi_psi();
        auto via = chi_psi_from_cubics(a, b);
        CHECK(closed.first == via.first);
        CHECK(closed.second == via.second);
        CHECK(discriminant(a * b) == x.sextic_discriminant());
    }
    CHECK_THROWS_AS(Split3Curve<Rational>(Rational(1), Rational(0)), Error);
    CHECK_THROWS_AS(Split3Curve<Rational>(Rational(1), Rational(27)), Error);
}

TEST_CASE("elliptic components and j-invariants") {
    Split3Curve<Rational> c(Rational(1), Rational(1));
    CHECK(c.elliptic_component1() == UniPoly<Rational>({-4, 11, 8, 16}, Rational(0)));
    auto [j1, j2] = c.j_invariants();
    CHECK(j1 == rq(780448, 2197));
    CHECK(j2 == 128);
    CHECK(j_invariant_cubic(c.elliptic_component1()) == j1);
    CHECK(j_invariant_cubic(c.elliptic_component2()) == j2);
    CHECK(Split3Curve<Rational>(Rational(3), Rational(3)).j_invariants().second == 0);
    CHECK_THROWS_AS(Split3Curve<Rational>(Rational(3), Rational(3)).elliptic_component2(), Error);  // 12 - 3 - 9 = 0

    std::mt19937_64 rng(32);
    for (int i = 0; i < 20; ++i) {
        auto [u, v] = random_uv(rng);
        Split3Curve<Rational> x(u, v);
        auto [a, b] = x.j_invariants();
        CHECK(j_invariant_cubic(x.elliptic_component1()) == a);
        CHECK(j_invariant_cubic(x.elliptic_component2()) == b);
    }
}

TEST_CASE("degree-3 cover identities") {
    std::mt19937_64 rng(33);
    int printed_zero = 0;
    for (int i = 0; i < 20; ++i) {
        auto [u, v] = random_uv(rng);
        Split3Curve<Rational> x(u, v);
        auto f = x.curve().f();
        auto [e1, e2] = x.elliptic_components();
        auto [c1, c2] = x.corrected_covers();
        CHECK(cover_residual(c1, e1, f).is_zero());
        CHECK(cover_residual(c2, e2, f).is_zero());
        auto [p1, p2] = x.printed_covers();
        printed_zero += cover_residual(p1, e1, f).is_zero() + cover_residual(p2, e2, f).is_zero();
    }
    CHECK(printed_zero == 0);
}

TEST_CASE("j-quadratic over k(chi, psi)") {
    Split3Curve<Rational> c(Rational(1), Rational(1));
    auto [chi, psi] = c.chi_psi();
    auto st = st_from_chipsi(chi, psi);
    CHECK(st.s == rq(1061664, 2197));
    CHECK(st.t == rq(99897344, 2197));
    auto printed = printed_st_from_chipsi(chi, psi);
    CHECK(printed.s != st.s);
    CHECK(printed.t != st.t);
    CHECK_THROWS_AS(st_from_chipsi(Rational(0), Rational(1)), Error);

    // The fibre of (fu, fv) -> (chi, psi) over (1, 1) contains (17/13, 2).
    Split3Curve<Rational> twin(rq(17, 13), Rational(2));
    CHECK(twin.chi_psi() == c.chi_psi());
    auto a = c.j_invariants(), b = twin.j_invariants();
    CHECK(((a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first)));

    std::mt19937_64 rng(34);
    for (int i = 0; i < 100; ++i) {
        auto [u, v] = random_uv(rng, false);
        Split3Curve<Rational> x(u, v);
        auto [j1, j2] = x.j_invariants();
        auto [h, k] = x.chi_psi();
        auto q = st_from_chipsi(h, k);
        CHECK(q.s == j1 + j2);
        CHECK(q.t == j1 * j2);
        Rational w = s3_cofactor(h, k);
        Rational scale = Rational(Integer(40310784)) * Rational(Integer(40310784)) * power(h, 8) * power(k, 12);
        CHECK((j1 - j2) * (j1 - j2) * scale == s3_surface(h, k) * w * w);
    }
}

TEST_CASE("S3 governs rationality of the j's over F_101") {
    const std::uint64_t p = 101;
    int squares = 0, nonsquares = 0;
    for (long a = 1; a < 101; ++a)
        for (long b = 1; b < 101; ++b) {
            Fp chi(a, p), psi(b, p);
            auto q = st_from_chipsi(chi, psi);
            Fp w = s3_cofactor(chi, psi);
            if (w.is_zero()) continue;
            Fp disc = q.s * q.s - Fp(4, p) * q.t;
            bool split = is_square(disc);
            CHECK(split == is_square(s3_surface(chi, psi)));
            (split ? squares : nonsquares)++;
        }
    CHECK(squares > 0);
    CHECK(nonsquares > 0);
    // Points coming from the family always split.
    for (long a = 0; a < 101; a += 2)
        for (long b = 1; b < 101; b += 3) {
            Fp u(a, p), v(b, p);
            if (v == Fp(27, p) || split3_R(u, v).is_zero()) continue;
            auto [chi, psi] = Split3Curve<Fp>(u, v).chi_psi();
            if (chi.is_zero() || psi.is_zero() || s3_cofactor(chi, psi).is_zero()) continue;
            CHECK(is_square(s3_surface(chi, psi)));
        }
}

TEST_CASE("Igusa invariants in chi, psi") {
    auto pj = printed_igusa_from_chipsi(Rational(1), Rational(1));
    CHECK(pj.J10 == -Rational(Integer(1) << 30));
    CHECK_THROWS_AS(igusa_from_chipsi(Rational(0), Rational(2)), Error);

    Split3Curve<Rational> c(Rational(1), Rational(1));
    auto [chi, psi] = c.chi_psi();
    auto sextic = igusa_j(c.curve());
    CHECK(weighted_equal(igusa_from_chipsi(chi, psi), sextic));
    CHECK_FALSE(weighted_equal(printed_igusa_from_chipsi(chi, psi), sextic));

    std::mt19937_64 rng(35);
    for (int i = 0; i < 50; ++i) {
        auto [u, v] = random_uv(rng, false);
        Split3Curve<Rational> x(u, v);
        auto [h, k] = x.chi_psi();
        CHECK(weighted_equal(igusa_from_chipsi(h, k), igusa_j(x.curve())));
    }
}

TEST_CASE("isogeny loci in chi, psi") {
    auto n2 = split3_isogeny_locus(2);
    REQUIRE(n2.size() == 2);
    CHECK(n2[0].total_degree() == 12);
    CHECK(n2[0] != split3_forms().printed_n2_genus0);
    auto printed = split3_forms().printed_n2_genus0;
    Integer pure = Integer("10820843684757504") + Integer("16231265527136256") + Integer("8115632763568128") +
                   Integer("1352605460594688");
    CHECK(printed(Integer(1), Integer(0)) == pure);

    auto off = isogeny_locus3_eval(2, Rational(1), Rational(1));
    for (const auto& x : off) CHECK(x != 0);
    CHECK_THROWS_AS(split3_isogeny_locus(11), Error);

    const std::uint64_t p = 101;
    for (int N : {2, 3, 5}) {
        auto factors = split3_isogeny_locus(N);
        int hits = 0;
        for (long a = 0; a < 101; ++a)
            for (long b = 1; b < 101; ++b) {
                Fp u(a, p), v(b, p);
                if (v == Fp(27, p) || split3_R(u, v).is_zero()) continue;
                Split3Curve<Fp> x(u, v);
                auto [chi, psi] = x.chi_psi();
                if (chi.is_zero() || psi.is_zero()) continue;
                auto [j1, j2] = x.j_invariants();
                bool zero = false;
                for (const auto& f : factors) zero = zero || f.eval_in(chi, psi).is_zero();
                CHECK(zero == eval_phi(phi(N), j1, j2).is_zero());
                hits += zero;
            }
        CHECK(hits > 0);
    }
}
