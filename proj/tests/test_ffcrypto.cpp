#include "doctest.h"
#include "g2split/ffcrypto.hpp"

using namespace g2split;

namespace {
UniPoly<Fp> fp_poly(std::initializer_list<std::int64_t> c, std::uint64_t p) {
    std::vector<Fp> v;
    for (auto x : c) v.emplace_back(x, p);
    return UniPoly<Fp>(v, Fp(0, p));
}
}  // namespace

TEST_CASE("genus-2 lift") {
    auto lift = lift_to_genus2(make_alpha(7, 1, 1));
    CHECK(lift.f1 == fp_poly({-1, 2, 1}, 7));
    CHECK(lift.f2 == fp_poly({-1, -2, 1}, 7));
    CHECK(lift.f3 == fp_poly({6, 4, 1}, 7));
    CHECK_THROWS_AS(lift_to_genus2(make_alpha(7, 0, 1)), Error);
    CHECK_THROWS_AS(lift_to_genus2(make_alpha(7, 3, 0)), Error);
    CHECK_THROWS_AS(lift_to_genus2(make_alpha(7, 2, 3)), Error);  // 4 + 9 + 1 = 0 mod 7
    CHECK_THROWS_AS(make_alpha(13, 1, 1), Error);

    for (std::uint64_t p : {7u, 11u, 19u}) {
        for (std::uint64_t a0 = 1; a0 < p; ++a0)
            for (std::uint64_t a1 = 1; a1 < p; ++a1) {
                Fp2 al = make_alpha(p, a0, a1);
                std::optional<LiftedCurve> lifted;
                try {
                    lifted = lift_to_genus2(al);
                } catch (const Error&) {
                    continue;
                }
                const LiftedCurve& c = *lifted;
                // Conjugation gives the same curve under x -> -x.
                auto bar = lift_to_genus2(al.conj());
                CHECK(bar.sextic() == c.sextic().compose(fp_poly({0, -1}, p)));
                // Each x^2 + k x - 1 has roots r, -1/r in F_{p^2}; six distinct roots.
                std::vector<Fp2> roots;
                for (const auto& f : {c.f1, c.f2, c.f3}) {
                    Fp2 k = Fp2::from_base(f.coeff(1));
                    Fp2 s = square_root(k * k + Fp2::from_base(Fp(4, p)));
                    Fp2 half = Fp2::from_base(Fp(2, p)).inverse();
                    Fp2 r1 = (-k + s) * half, r2 = (-k - s) * half;
                    CHECK(r1 * r2 == -one_like(r1));
                    roots.push_back(r1);
                    roots.push_back(r2);
                }
                for (std::size_t x = 0; x < roots.size(); ++x)
                    for (std::size_t y = x + 1; y < roots.size(); ++y) CHECK(roots[x] != roots[y]);
            }
    }
}

TEST_CASE("supersingularity over F_{p^2}") {
    const std::uint64_t p = 7;
    Fp2 z = Fp2::from_base(Fp(0, p)), one = Fp2::from_base(Fp(1, p));
    auto r = is_supersingular(UniPoly<Fp2>({z, one, z, one}, z));  // y^2 = x^3 + x
    CHECK(r.count == 64);
    CHECK(r.supersingular);
    CHECK(r.trace_divisible);
    auto m = is_supersingular(montgomery_cubic(make_alpha(p, 1, 1)));
    CHECK_FALSE(m.supersingular);
    CHECK(m.trace % 7 != 0);
    UniPoly<Fp2> big({Fp2::from_base(Fp(0, 1000003)), Fp2::from_base(Fp(1, 1000003)), Fp2::from_base(Fp(0, 1000003)),
                      Fp2::from_base(Fp(1, 1000003))},
                     Fp2::from_base(Fp(0, 1000003)));
    CHECK_THROWS_AS(is_supersingular(big), Error);
}

TEST_CASE("restriction lemma on full scans") {
    auto row = verify_restriction_isogeny(make_alpha(7, 1, 1));
    CHECK(row.valid);
    CHECK(row.lemma_holds);
    CHECK(row.lx->c1 == 0);
    CHECK(row.lx->c2 == -2);
    CHECK(row.le->c1 == -2);
    auto skipped = verify_restriction_isogeny(make_alpha(7, 0, 3));
    CHECK_FALSE(skipped.valid);
    CHECK(skipped.reason.find("alpha0 = 0") != std::string::npos);

    // Frozen from an independent enumeration: (rows, valid, supersingular).
    struct Expect {
        std::uint64_t p;
        std::size_t rows, valid, supersingular;
    };
    for (auto e : {Expect{7, 42, 28, 0}, Expect{11, 110, 88, 4}, Expect{19, 342, 304, 12}, Expect{23, 506, 460, 4}}) {
        auto rows = ss_scan(e.p, std::nullopt, 4);
        CHECK(rows.size() == e.rows);
        std::size_t valid = 0, holds = 0, ss = 0;
        for (const auto& r : rows) {
            valid += r.valid;
            holds += r.lemma_holds;
            if (r.valid) ss += r.supersingular;
            if (r.supersingular) CHECK(is_supersingular(montgomery_cubic(make_alpha(e.p, r.alpha0, r.alpha1))).count == (e.p + 1) * (e.p + 1));
        }
        CHECK(valid == e.valid);
        CHECK(holds == e.valid);
        CHECK(ss == e.supersingular);
    }
    CHECK(ss_scan(7, 0).empty());
    auto serial = ss_scan(11, 30), parallel = ss_scan(11, 30, 3);
    REQUIRE(serial.size() == 30);
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(to_csv(serial[i]) == to_csv(parallel[i]));
    CHECK(to_csv(row) == "7,1,1,true,\"\",false,true,0,-2,-2");
    CHECK(scan_csv_header() == "p,alpha0,alpha1,valid,reason,supersingular,lemma_holds,LX_c1,LX_c2,LE_c1");
}

TEST_CASE("Weil-restriction forms") {
    const std::uint64_t p = 7;
    Fp2 al = make_alpha(p, 2, 3), de = make_alpha(p, 0, 0);
    auto [w0, w1] = weil_restriction_forms(al, de, Fp(0, p), Fp(0, p), Fp(0, p), Fp(0, p));
    CHECK(w0.is_zero());
    CHECK(w1.is_zero());
    // x = 1, y = 0, delta = 0: W0 = n (a0 - 2) + a0 with n = 13 = 6.
    auto [v0, v1] = weil_restriction_forms(al, de, Fp(1, p), Fp(0, p), Fp(0, p), Fp(0, p));
    CHECK(v0 == Fp(6 * (2 - 2) + 2, p));
    CHECK(v1 == Fp(6 * (3 - 2) + 3, p));
}
