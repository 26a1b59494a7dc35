#include <filesystem>
#include <random>

#include <unistd.h>

#include "doctest.h"
#include "g2split/modular.hpp"

using namespace g2split;

TEST_CASE("symmetric reduction of the displayed phi_2 and phi_3") {
    for (int N : {2, 3}) {
        auto xy = printed_phi_xy(N);
        CHECK(xy.is_symmetric());
        CHECK(xy_to_st(xy) == printed_phi_st(N));
        CHECK(st_to_xy(printed_phi_st(N)) == xy);
    }
    auto st = printed_phi_st(2);
    CHECK(st.coeff(1, 1) == Integer(1485));
    CHECK(st.coeff(0, 1) == Integer(41097375));
}

TEST_CASE("bundled data: symmetry, Kronecker congruence, (s,t) forms") {
    for (int N : {2, 3, 5, 7}) {
        const auto& m = phi(N);
        CHECK(m.N == N);
        CHECK(m.xy.is_symmetric());
        CHECK(kronecker_congruence_holds(m.xy, N));
        CHECK(st_to_xy(m.st) == m.xy);
        CHECK(m.xy.degree_x() == N + 1);
        CHECK(m.xy.coeff(N + 1, 0) == Integer(1));
    }
    CHECK_FALSE(kronecker_congruence_holds(phi(5).xy, 7));
    CHECK_THROWS_AS(phi(4), Error);
}

TEST_CASE("CM spot values of the bundled polynomials") {
    // Orders with an element of norm N give phi_N(j, j) = 0.
    CHECK(are_isogenous(Rational(1728), Rational(1728), 5));           // 2 + i
    CHECK(are_isogenous(Rational(-3375), Rational(-3375), 7));         // sqrt(-7)
    CHECK(are_isogenous(Rational(0), Rational(0), 7));                 // 3 + omega
    CHECK(are_isogenous(Rational(-32768), Rational(-32768), 5));       // D = -11
    CHECK(are_isogenous(Rational(-884736), Rational(-884736), 5));     // D = -19
    CHECK(are_isogenous(Rational(-884736), Rational(-884736), 7));
    CHECK(are_isogenous(Rational(8000), Rational(8000), 3));           // 1 + sqrt(-2)
    CHECK(are_isogenous(Rational(8000), Rational(8000), 2));           // sqrt(-2)
    CHECK(are_isogenous(Rational(1728), Rational(287496), 2));         // Z[i] -> Z[2i]
    CHECK(are_isogenous(Rational(0), Rational(-12288000), 3));         // Z[omega] -> index 3
    CHECK_FALSE(are_isogenous(Rational(0), Rational(1), 2));
    CHECK(eval_phi(phi(2), Rational(0), Rational(1)) == Rational(phi(2).xy(Integer(0), Integer(1))));
    CHECK_FALSE(are_isogenous(Rational(1728), Rational(1728), 7));
}

TEST_CASE("phi values commute with reduction mod p") {
    std::mt19937_64 rng(4);
    for (int N : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 10; ++trial) {
            long a = static_cast<long>(rng() % 2000) - 1000, b = static_cast<long>(rng() % 2000) - 1000;
            Integer v = phi(N).xy(Integer(a), Integer(b));
            Fp w = phi(N).xy.eval_in(Fp(a, 101), Fp(b, 101));
            CHECK(Fp::from_integer(v, 101) == w);
        }
    }
}

TEST_CASE("elimination through the identity family recovers phi") {
    RationalParam s{parse_bipoly("x + y", "x", "y"), parse_bipoly("1", "x", "y")};
    RationalParam t{parse_bipoly("x*y", "x", "y"), parse_bipoly("1", "x", "y")};
    for (int N : {2, 3}) {
        auto loc = eliminate_locus(phi(N).st, s, t);
        auto expected = primitive_part(phi(N).xy.convert(Rational(0))).first;
        CHECK(loc == expected);
    }
    // s = (x + y)/2, t = xy/4: denominators cleared, result is phi(x/2, y/2) up to scale.
    RationalParam s2{parse_bipoly("x + y", "x", "y"), parse_bipoly("2", "x", "y")};
    RationalParam t2{parse_bipoly("x*y", "x", "y"), parse_bipoly("4", "x", "y")};
    auto loc2 = eliminate_locus(phi(2).st, s2, t2);
    CHECK(loc2(Integer(2 * 1728), Integer(2 * 287496)) == 0);
    EliminationOptions tight;
    tight.max_degree = 3;
    CHECK_THROWS_AS(eliminate_locus(phi(2).st, s, t, tight), Error);
}

TEST_CASE("denominator factors are stripped") {
    // s = 1/d, t = 0 with d = y - x: phi_2(1/d, 0) d^3 has no factor d.
    RationalParam s{parse_bipoly("1", "x", "y"), parse_bipoly("y - x", "x", "y")};
    RationalParam t{parse_bipoly("0", "x", "y"), parse_bipoly("1", "x", "y")};
    EliminationOptions opt;
    opt.strip_factors.push_back(parse_bipoly("y - x", "x", "y"));
    auto loc = eliminate_locus(phi(2).st, s, t, opt);
    auto [q, exact] = divide_by(loc.convert(Rational(0)), parse_bipoly("y - x", "x", "y"));
    CHECK_FALSE(exact);
    CHECK(loc.total_degree() == 3);
}

TEST_CASE("locus serialization and cache") {
    auto p = phi(3).xy;
    auto text = serialize_locus(p, 9, 3);
    CHECK(parse_locus(text, 9, 3) == p);
    std::string corrupt = text;
    corrupt[corrupt.size() - 2] = corrupt[corrupt.size() - 2] == '1' ? '2' : '1';
    try {
        parse_locus(corrupt, 9, 3);
        FAIL("expected integrity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::integrity);
    }
    CHECK_THROWS_AS(parse_locus(text, 9, 5), Error);

    auto dir = std::filesystem::temp_directory_path() / ("g2split_cache_test_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    int computed = 0;
    {
        LocusCache cache(dir);
        auto a = cache.get(9, 3, [&] { ++computed; return p; });
        auto b = cache.get(9, 3, [&] { ++computed; return p; });
        CHECK(a == p);
        CHECK(b == p);
    }
    {
        LocusCache cache(dir);
        auto c = cache.get(9, 3, [&] { ++computed; return p; });
        CHECK(c == p);
    }
    CHECK(computed == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("corrupt modular data is rejected") {
    std::string text(bundled_phi_data(5));
    auto pos = text.find('\n') + 1;
    text[pos] = text[pos] == '0' ? '1' : '0';
    try {
        parse_phi_data(text, 5);
        FAIL("expected integrity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::integrity);
    }
    CHECK_THROWS_AS(parse_phi_data(bundled_phi_data(5), 7), Error);
}
