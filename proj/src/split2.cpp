#include "g2split/split2.hpp"

namespace g2split {

namespace {

BiPoly<Integer> uv_poly(std::string_view text) { return to_integer_poly(parse_bipoly(text, "u", "v")); }

constexpr std::string_view kS2 =
    "v^4 - 18*(u + 9)*v^3 - (4*u^3 - 297*u^2 - 1458*u - 729)*v^2 - 216*u^2*(7*u + 27)*v"
    " + 4*u^3*(2*u^3 - 27*u^2 + 972*u + 729)";

constexpr std::string_view kF1 =
    "-16*v^3 - 81216*v^2 - 892296*v - 2460375 + 3312*u*v^2 + 707616*v*u + 3805380*u"
    " + 18360*v*u^2 - 1296162*u^2 - 1744*u^3*v - 140076*u^3 + 801*u^4 + 256*u^5";

constexpr std::string_view kF2 =
    "4096*u^7 + 256016*u^6 - 45824*u^5*v + 4736016*u^5 - 2126736*v*u^4 + 23158143*u^4"
    " - 25451712*u^3*v - 119745540*u^3 + 5291136*v^2*u^2 - 48166488*v*u^2 - 2390500350*u^2"
    " - 179712*u*v^3 + 35831808*u*v^2 + 1113270480*v*u + 9300217500*u - 4036608*v^3"
    " - 1791153000*v - 8303765625 - 1024*v^4 + 163840*u^3*v^2 - 122250384*v^2 + 256*u^2*v^3";

constexpr std::string_view kG1 =
    "-27008*u^6 + 256*u^7 - 2432*u^5*v + v^4 + 7296*u^3*v^2 - 6692*v^3*u - 1755067500*u"
    " + 2419308*v^3 - 34553439*u^4 + 127753092*v*u^2 + 16274844*v*u^3 - 1720730*u^2*v^2"
    " - 1941120*u^5 + 381631500*v + 1018668150*u^2 - 116158860*u^3 + 52621974*v^2"
    " + 387712*u^4*v - 483963660*v*u - 33416676*v^2*u + 922640625";

constexpr std::string_view kG2 =
    "291350448*u^6 - v^4*u^2 - 998848*u^6*v - 3456*u^7*v + 4749840*u^4*v^2 + 17032*u^5*v^2"
    " + 4*v^5 + 80368*u^8 + 256*u^9 + 6848224*u^7 - 10535040*v^3*u^2 - 35872*v^3*u^3 + 26478*v^4*u"
    " - 77908736*u^5*v + 9516699*v^4 + 307234984*u^3*v^2 - 419583744*v^3*u - 826436736*v^3"
    " + 27502903296*u^4 + 28808773632*v*u^2 - 23429955456*v*u^3 + 5455334016*u^2*v^2"
    " - 41278242816*v + 82556485632*u^2 - 108737593344*u^3 - 12123095040*v^2"
    " + 41278242816*v*u + 3503554560*v^2*u + 5341019904*u^5 - 2454612480*u^4*v";

}  // namespace

const char* to_string(AutStratum s) {
    switch (s) {
        case AutStratum::V4: return "V4";
        case AutStratum::D4: return "D4";
        case AutStratum::D6: return "D6";
        case AutStratum::boundary: return "boundary";
    }
    return "?";
}

const BiPoly<Integer>& printed_s2_poly() {
    static const BiPoly<Integer> p = uv_poly(kS2);
    return p;
}
const BiPoly<Integer>& printed_f1() {
    static const BiPoly<Integer> p = uv_poly(kF1);
    return p;
}
const BiPoly<Integer>& printed_f2() {
    static const BiPoly<Integer> p = uv_poly(kF2);
    return p;
}
const BiPoly<Integer>& d6_line() {
    static const BiPoly<Integer> p = uv_poly("4*v - u^2 + 110*u - 1125");
    return p;
}
const BiPoly<Integer>& printed_g1() {
    static const BiPoly<Integer> p = uv_poly(kG1);
    return p;
}
const BiPoly<Integer>& printed_g2() {
    static const BiPoly<Integer> p = uv_poly(kG2);
    return p;
}

std::pair<RationalParam, RationalParam> split2_st_params() {
    auto a = parse_bipoly("256*(v^2 - 2*u^3 + 54*u^2 - 9*u*v - 27*v)", "u", "v");
    auto b = parse_bipoly("u^2 + 9*u - 3*v", "u", "v");
    auto d = parse_bipoly("u^2 - 4*v + 18*u - 27", "u", "v");
    return {RationalParam{a, d}, RationalParam{b.pow(3).scale(Rational(65536)), d * d}};
}

BiPoly<Integer> split2_eliminated_locus(int N, LocusCache& cache) {
    if (!is_supported_level(N)) throw Error(ErrorKind::unsupported, "unsupported isogeny level " + std::to_string(N));
    return cache.get(2, N, [N] {
        auto [s, t] = split2_st_params();
        EliminationOptions opt;
        opt.strip_factors.push_back(s.den);
        return eliminate_locus(phi(N).st, s, t, opt);
    });
}

std::vector<BiPoly<Integer>> split2_isogeny_locus(int N, LocusCache& cache) {
    switch (N) {
        case 2: return {printed_f1(), printed_f2()};
        case 3: return {d6_line(), printed_g1(), printed_g2()};
        case 5:
        case 7: return {split2_eliminated_locus(N, cache)};
        default: throw Error(ErrorKind::unsupported, "unsupported isogeny level " + std::to_string(N));
    }
}

}  // namespace g2split
