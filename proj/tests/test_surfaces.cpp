#include <random>

#include "doctest.h"
#include "g2split/surfaces.hpp"

using namespace g2split;

namespace {
Rational rq(long a, long b) { return make_rational(a, b); }

Rational random_rational(std::mt19937_64& rng) {
    return make_rational(static_cast<long>(rng() % 61) - 30, static_cast<long>(rng() % 7) + 1);
}
}  // namespace

TEST_CASE("parameters from Igusa-Clebsch invariants") {
    auto a = si_from_igusa_clebsch(IgusaClebsch<Rational>{0, 0, 0, 1});
    CHECK(a == ShiodaInoseParams<Rational>{0, 0, rq(-243, 4), 0});
    auto b = si_from_igusa_clebsch(IgusaClebsch<Rational>{1, 1, 1, 1});
    CHECK(b == ShiodaInoseParams<Rational>{rq(1, 4), rq(-1, 4), rq(-243, 4), rq(243, 32)});
    CHECK_THROWS_AS(si_from_igusa_clebsch(IgusaClebsch<Rational>{1, 2, 3, 0}), Error);

    IgusaClebsch<Rational> ic{3, -5, 7, 11};
    auto base = si_from_igusa_clebsch(ic);
    auto scaled = si_from_igusa_clebsch(IgusaClebsch<Rational>{4 * ic.I2, 16 * ic.I4, 64 * ic.I6, 1024 * ic.I10});
    CHECK(scaled == ShiodaInoseParams<Rational>{16 * base.alpha, 64 * base.beta, 1024 * base.gamma, 4096 * base.delta});
    CHECK(weighted_si_equal(base, scaled));
    CHECK_FALSE(weighted_si_equal(base, b));
}

TEST_CASE("(2,2) family in (u, v)") {
    auto p = si_from_uv(Rational(2), Rational(9));
    CHECK(p.alpha == 265);
    CHECK(p.beta == 5743);
    Rational d = delta_uv(Rational(15), Rational(1));
    CHECK(si_from_uv(Rational(15), Rational(1)).delta == 7776 * 30 * d * d);
    CHECK_THROWS_AS(si_from_uv(Rational(1), Rational(-2)), Error);

    auto model = si_from_curve(Split2Curve<Rational>(Rational(1), Rational(2)).curve());
    CHECK(weighted_si_equal(p, model));

    std::mt19937_64 rng(61);
    int tested = 0;
    while (tested < 50) {
        Rational s1 = random_rational(rng), s2 = random_rational(rng);
        if (delta_s(s1, s2) == 0) continue;
        ++tested;
        auto uv = dihedral_invariants(s1, s2);
        auto ref = si_from_curve(Split2Curve<Rational>(s1, s2).curve());
        auto got = si_from_uv(uv.u, uv.v);
        CHECK(weighted_si_equal(got, ref));
        CHECK(got == ref);  // the sextic model realises the normalisation exactly
    }
}

TEST_CASE("(3,3) family in (chi, psi)") {
    Split3Curve<Rational> c(Rational(1), Rational(1));
    auto [chi, psi] = c.chi_psi();
    auto ref = si_from_curve(c.curve());
    CHECK(weighted_si_equal(si_from_chipsi(chi, psi), ref));
    CHECK_FALSE(weighted_si_equal(printed_si_from_chipsi(chi, psi), ref));
    auto one = printed_si_from_chipsi(Rational(1), Rational(1));
    CHECK(one.delta == -Rational(Integer(33554432) * 243) * (1 + 96 - 1152));
    CHECK_THROWS_AS(si_from_chipsi(Rational(0), Rational(1)), Error);

    std::mt19937_64 rng(62);
    int tested = 0, printed_ok = 0;
    while (tested < 50) {
        Rational u = make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5) + 1);
        Rational v = make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5) + 1);
        if (v == 0 || v == 27 || split3_R(u, v) == 0 || v - 9 - 2 * u == 0) continue;
        ++tested;
        Split3Curve<Rational> x(u, v);
        auto [h, k] = x.chi_psi();
        auto r = si_from_curve(x.curve());
        CHECK(weighted_si_equal(si_from_chipsi(h, k), r));
        printed_ok += weighted_si_equal(printed_si_from_chipsi(h, k), r);
    }
    CHECK(printed_ok == 0);
}

TEST_CASE("quartic surface") {
    auto zero = si_quartic(ShiodaInoseParams<Rational>{0, 0, 0, 0});
    MPoly<Rational, 4> expect(Rational(0));
    expect.add_term({1, 0, 2, 1}, Rational(1));
    expect.add_term({0, 3, 0, 1}, Rational(-4));
    expect.add_term({4, 0, 0, 0}, rq(-1, 2));
    CHECK(zero == expect);

    auto q = si_quartic(ShiodaInoseParams<Rational>{1, 1, 1, 1});
    CHECK(q.terms().size() == 7);
    CHECK(q.degrees() == std::vector<int>{4});
    // Exact evaluation: [1:0:1:1] gives 1 + 1 - 1 = 1, so it is not on the surface;
    // [1:0:0:1] is.
    CHECK(q({Rational(1), Rational(0), Rational(1), Rational(1)}) == 1);
    CHECK(q({Rational(1), Rational(0), Rational(0), Rational(1)}) == 0);
    CHECK(q({Rational(1), Rational(1), Rational(1), Rational(1)}) == 1);
    CHECK(q.coeff({2, 0, 0, 2}) == rq(-1, 2));
}

TEST_CASE("Kummer model and Inose pencil") {
    CHECK_THROWS_AS(kummer_affine(Rational(0), Rational(0), Rational(0), Rational(1)), Error);
    std::mt19937_64 rng(63);
    for (int i = 0; i < 20; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng), d = random_rational(rng);
        if (elliptic_discriminant(a, b) == 0 || elliptic_discriminant(c, d) == 0) continue;
        auto k = kummer_affine(a, b, c, d), swapped = kummer_affine(c, d, a, b);
        Rational x1 = random_rational(rng), x2 = random_rational(rng), t = random_rational(rng);
        if (t == 0) continue;
        // (x1 <-> x2, a <-> c, b <-> d, t2 -> 1/t2), times t2^2.
        CHECK(swapped({x2, x1, 1 / t}) * t * t == -k({x1, x2, t}));
    }

    auto pen = inose_pencil(Rational(0), Rational(1), Rational(0), Rational(1), 6);
    CHECK(pen.disc1 == -432);
    auto f1 = pen.fiber(Rational(1));
    CHECK(f1.A == 0);
    CHECK(f1.B == (2 * pen.disc1 + 864) / 64);
    CHECK(f1.is_singular());
    CHECK_FALSE(pen.fiber(Rational(2)).is_singular());
    CHECK_THROWS_AS(inose_pencil(Rational(0), Rational(1), Rational(0), Rational(1), 7), Error);
    CHECK_THROWS_AS(inose_pencil(Rational(0), Rational(0), Rational(0), Rational(1), 1), Error);

    for (int s = 1; s <= 6; ++s) {
        auto p = inose_pencil(Rational(2), Rational(-3), rq(1, 2), Rational(5), s);
        auto num = p.fiber_discriminant_numerator();
        CHECK(num.degree() == 4 * s);
        for (long n : {-3L, 2L, 7L}) {
            Rational t(n);
            CHECK(num(t) == p.fiber(t).discriminant() * 4096 * power(t, 2 * s));
        }
    }
}
