#include <random>

#include "doctest.h"
#include "g2split/split2.hpp"

using namespace g2split;

namespace {
Rational rq(long a, long b) { return make_rational(a, b); }

Rational random_rational(std::mt19937_64& rng) {
    long n = static_cast<long>(rng() % 61) - 30;
    long d = static_cast<long>(rng() % 7) + 1;
    return make_rational(n, d);
}
}  // namespace

TEST_CASE("dihedral invariants and their inverse") {
    auto uv = dihedral_invariants(Rational(1), Rational(2));
    CHECK(uv.u == 2);
    CHECK(uv.v == 9);
    CHECK(dihedral_invariants(Rational(2), Rational(1)) == uv);
    CHECK(delta_s(Rational(0), Rational(0)) == 27);
    CHECK(dihedral_invariants(Rational(0), Rational(0)) == DihedralInvariants<Rational>{0, 0});
    CHECK_THROWS_AS(dihedral_invariants(Rational(3), Rational(3)), Error);  // 27 - 162 - 81 + 216 = 0

    auto pre = uv_to_s1s2(Rational(2), Rational(9));
    CHECK(std::find(pre.begin(), pre.end(), std::pair<Rational, Rational>{1, 2}) != pre.end());
    CHECK(std::find(pre.begin(), pre.end(), std::pair<Rational, Rational>{2, 1}) != pre.end());
    auto zero = uv_to_s1s2(Rational(0), Rational(0));
    CHECK(std::find(zero.begin(), zero.end(), std::pair<Rational, Rational>{0, 0}) != zero.end());
    for (const auto& [a, b] : uv_to_s1s2(Rational(1), Rational(-1))) CHECK(dihedral_invariants(a, b) == DihedralInvariants<Rational>{1, -1});

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Rational s1 = random_rational(rng), s2 = random_rational(rng);
        if (delta_s(s1, s2) == 0) continue;
        auto d = dihedral_invariants(s1, s2);
        auto back = uv_to_s1s2(d.u, d.v);
        CHECK(std::find(back.begin(), back.end(), std::pair<Rational, Rational>{s1, s2}) != back.end());
        for (const auto& [a, b] : back) CHECK(dihedral_invariants(a, b) == d);
    }
}

TEST_CASE("cube-root-of-unity action over F_103") {
    const std::uint64_t p = 103;  // 103 = 1 mod 3
    auto eps = cube_roots(Fp(1, p));
    REQUIRE(eps.size() == 3);
    Fp e = eps[0] == Fp(1, p) ? eps[1] : eps[0];
    for (long a = 0; a < 20; ++a)
        for (long b = 0; b < 20; ++b) {
            Fp s1(a, p), s2(b, p);
            if (delta_s(s1, s2).is_zero()) continue;
            auto d = dihedral_invariants(s1, s2);
            CHECK(dihedral_invariants(e * s1, e * e * s2) == d);
            auto back = uv_to_s1s2(d.u, d.v);
            CHECK(std::find(back.begin(), back.end(), std::pair<Fp, Fp>{s1, s2}) != back.end());
        }
}

TEST_CASE("elliptic components and j-invariants") {
    Split2Curve<Rational> c(Rational(1), Rational(2));
    auto [j1, j2] = c.j_invariants();
    CHECK(j1 == rq(32000, 23));
    CHECK(j2 == rq(-256, 23));
    auto [e1, e2] = c.elliptic_components();
    CHECK(j_invariant_cubic(e1) == j1);
    CHECK(j_invariant_cubic(e2) == j2);
    auto [z1, z2] = Split2Curve<Rational>(Rational(0), Rational(0)).j_invariants();
    CHECK(z1 == 0);
    CHECK(z2 == 0);
    CHECK(j_invariant_cubic(UniPoly<Rational>({0, 1, 0, 1}, Rational(0))) == 1728);

    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        Rational s1 = random_rational(rng), s2 = random_rational(rng);
        if (delta_s(s1, s2) == 0) continue;
        Split2Curve<Rational> x(s1, s2);
        auto [a, b] = x.j_invariants();
        auto [m1, m2] = x.elliptic_components();
        CHECK(j_invariant_cubic(m1) == a);
        CHECK(j_invariant_cubic(m2) == b);
        // Sextic Igusa-Clebsch invariants are defined (the curve is smooth).
        CHECK(igusa_clebsch(x.curve()).I10 != 0);
    }
}

TEST_CASE("j-quadratic and S2 identities on 200 seeded points") {
    auto q = j_quadratic(Rational(2), Rational(9));
    CHECK(q.s == rq(31744, 23));
    CHECK(q.t == rq(-8192000, 529));
    CHECK(printed_j_quadratic(Rational(2), Rational(9)).t == rq(-327680, 529));
    auto q0 = j_quadratic(Rational(0), Rational(0));
    CHECK(q0.s == 0);
    CHECK(q0.t == 0);
    CHECK(s2_surface(Rational(2), Rational(9)) == 15876);
    CHECK(s2_surface(Rational(1), Rational(1)) == -1083);
    CHECK(s2_surface(Rational(0), Rational(1)) == 784);
    CHECK(printed_s2(Rational(2), Rational(9)) == 14876);
    CHECK_THROWS_AS(j_quadratic(Rational(1), Rational(-2)), Error);  // Delta = 1 + 8 + 18 - 27

    std::mt19937_64 rng(2024);
    int tested = 0;
    while (tested < 200) {
        Rational s1 = random_rational(rng), s2 = random_rational(rng);
        if (delta_s(s1, s2) == 0) continue;
        ++tested;
        auto [j1, j2] = Split2Curve<Rational>(s1, s2).j_invariants();
        auto uv = dihedral_invariants(s1, s2);
        auto jq = j_quadratic(uv.u, uv.v);
        CHECK(j1 + j2 == jq.s);
        CHECK(j1 * j2 == jq.t);
        Rational d = delta_uv(uv.u, uv.v);
        CHECK(d * d == delta_s(s1, s2) * delta_s(s1, s2));
        CHECK((j1 - j2) * (j1 - j2) * d * d == 65536 * s2_surface(uv.u, uv.v));
        CHECK(is_square(s2_surface(uv.u, uv.v)));
        auto pair = j_pair_from_uv(uv.u, uv.v);
        REQUIRE(pair);
        CHECK(((pair->first == j1 && pair->second == j2) || (pair->first == j2 && pair->second == j1)));
    }
    CHECK_FALSE(j_pair_from_uv(Rational(1), Rational(1)));
}

TEST_CASE("automorphism strata") {
    CHECK(aut_stratum(Rational(2), Rational(9)) == AutStratum::V4);
    CHECK(aut_stratum(Rational(1), Rational(2)) == AutStratum::D4);
    CHECK(aut_stratum(Rational(5), Rational(150)) == AutStratum::D6);
    CHECK(std::string(to_string(AutStratum::D6)) == "D6");
    // Both conditions: v = 2u^{3/2}, e.g. u = 25, v = 250, and 1000 - 625 + 2750 - 1125 != 0.
    CHECK(aut_stratum(Rational(25), Rational(250)) == AutStratum::D4);
}

TEST_CASE("D4 pair") {
    auto a = d4_pair(Rational(1));
    CHECK(a.first == 128);
    CHECK(a.second == 10976);
    auto b = d4_pair(Rational(15));
    CHECK(b.first == 54000);
    CHECK(b.second == 0);
    auto c = d4_pair(Rational(0));
    CHECK(c.first == 0);
    CHECK(c.second == 54000);
    CHECK_THROWS_AS(d4_pair(Rational(-1)), Error);
    int hits = 0;
    for (long n = -16; n <= 16 && hits < 30; ++n) {
        Rational w = make_rational(n, 3);
        if (w == -1) continue;
        auto [j, jp] = d4_pair(w);
        CHECK(are_isogenous(j, jp, 2));
        ++hits;
    }
    CHECK(hits == 30);
}

TEST_CASE("isogeny loci against elimination") {
    auto g2 = split2_eliminated_locus(2);
    CHECK(g2 == primitive_part((printed_f1() * printed_f2()).convert(Rational(0))).first);
    auto g3 = split2_eliminated_locus(3);
    CHECK(g3 == primitive_part((d6_line() * printed_g1() * printed_g2()).convert(Rational(0))).first);

    auto vals = isogeny_locus_eval(3, Rational(5), Rational(150));
    CHECK(vals.size() == 3);
    CHECK(vals[0] == 0);
    auto at29 = isogeny_locus_eval(2, Rational(2), Rational(9));
    CHECK(at29[0] != 0);
    CHECK(at29[1] != 0);
    CHECK_THROWS_AS(isogeny_locus_eval(4, Rational(2), Rational(9)), Error);
}

TEST_CASE("mod-p soundness of the loci over F_101") {
    const std::uint64_t p = 101;
    for (int N : {2, 3, 5, 7}) {
        auto factors = split2_isogeny_locus(N);
        int on_locus = 0;
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b) {
                Fp u(static_cast<long>(a), p), v(static_cast<long>(b), p);
                if (delta_uv(u, v).is_zero()) continue;
                auto js = j_pair_from_uv(u, v);
                if (!js) continue;
                bool zero = false;
                for (const auto& f : factors) zero = zero || f.eval_in(u, v).is_zero();
                bool iso = eval_phi(phi(N), js->first, js->second).is_zero();
                CHECK(zero == iso);
                on_locus += zero;
            }
        CHECK(on_locus > 0);
    }
    // From (s1, s2) directly, including points whose j's need no square root.
    for (long a = 0; a < 101; a += 3)
        for (long b = 0; b < 101; b += 2) {
            Fp s1(a, p), s2(b, p);
            if (delta_s(s1, s2).is_zero()) continue;
            auto [j1, j2] = Split2Curve<Fp>(s1, s2).j_invariants();
            auto uv = dihedral_invariants(s1, s2);
            for (int N : {2, 3, 5}) {
                bool zero = false;
                for (const auto& f : split2_isogeny_locus(N)) zero = zero || f.eval_in(uv.u, uv.v).is_zero();
                CHECK(zero == eval_phi(phi(N), j1, j2).is_zero());
            }
        }
}
