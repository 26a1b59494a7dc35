#include "g2split/split3.hpp"

namespace g2split {

namespace {

BiPoly<Rational> cp(std::string_view text) { return parse_bipoly(text, "chi", "psi"); }

constexpr std::string_view kSNum =
    "-16777216*chi^12 - 10485760*chi^11*psi/3 - 2883584*chi^10*psi^2/9 - 458752*chi^9*psi^3/27"
    " - 46592*chi^8*psi^4/81 + 258048*chi^8*psi^3 - 3136*chi^7*psi^5/243 + 16896*chi^7*psi^4"
    " - 140*chi^6*psi^6/729 - 288*chi^6*psi^5 - 4*chi^5*psi^7/2187 - 152*chi^5*psi^6/3"
    " - 17*chi^4*psi^8/1679616 - 233*chi^4*psi^7/144 - 432*chi^4*psi^6 - chi^3*psi^9/40310784"
    " - 25*chi^3*psi^8/1152 - 405*chi^3*psi^7/2 - chi^2*psi^9/9216 - 81*chi^2*psi^8/8"
    " - 81*chi*psi^9/512 - 19683*psi^9/256";

constexpr std::string_view kTBase =
    "5308416*chi^5 + 442368*chi^4*psi + 13824*chi^3*psi^2 + 192*chi^2*psi^3 + chi*psi^4"
    " - 373248*chi*psi^3 - 11664*psi^4";

constexpr std::string_view kS3 =
    "3057647616*chi^8 + 509607936*chi^7*psi + 34504704*chi^6*psi^2 + 1216512*chi^5*psi^3"
    " + 23616*chi^4*psi^4 - 137355264*chi^4*psi^3 + 240*chi^3*psi^5 - 8957952*chi^3*psi^4"
    " + chi^2*psi^6 - 69984*chi^2*psi^5 + 2916*chi*psi^6 + 2125764*psi^6";

constexpr std::string_view kW =
    "12230590464*chi^8 + 1528823808*chi^7*psi + 79626240*chi^6*psi^2 + 2211840*chi^5*psi^3"
    " + 34560*chi^4*psi^4 + 80621568*chi^4*psi^3 + 288*chi^3*psi^5 + 10077696*chi^3*psi^4"
    " + chi^2*psi^6 + 314928*chi^2*psi^5 + 2916*chi*psi^6 + 2125764*psi^6";

constexpr std::string_view kJ2 = "chi*(4608*chi^2 + 192*chi*psi - psi^2)";
constexpr std::string_view kJ4 =
    "663552*chi^6 + 55296*chi^5*psi + 576*chi^4*psi^2 - 24*chi^3*psi^3 - 10368*chi^2*psi^3 - 54*chi*psi^4";
constexpr std::string_view kJ6 =
    "-331776*chi^7*psi^2 - 27648*chi^6*psi^3 - 576*chi^5*psi^4 - 62208*chi^4*psi^4 + 2592*chi^3*psi^5"
    " - 2916*chi*psi^6";
constexpr std::string_view kJ10 = "-3779136*chi^3*psi^9";

constexpr std::string_view kN2Genus0 =
    "1352605460594688*chi^12 + 253613523861504*chi^11*psi + 21134460321792*chi^10*psi^2"
    " + 1027369598976*chi^9*psi^3 + 32105299968*chi^8*psi^4 - 187238109413376*chi^8*psi^3"
    " + 668860416*chi^7*psi^5 - 18389457174528*chi^7*psi^4 + 9289728*chi^6*psi^6"
    " - 696570347520*chi^6*psi^5 + 82944*chi^5*psi^7 - 12093235200*chi^5*psi^6 + 432*chi^4*psi^8"
    " - 75582720*chi^4*psi^7 + 11284439629824*chi^4*psi^6 + chi^3*psi^9 + 314928*chi^3*psi^8"
    " + 396718580736*chi^3*psi^7 + 4374*chi^2*psi^9 + 3673320192*chi^2*psi^8 + 6377292*chi*psi^9"
    " + 3099363912*psi^9";

constexpr std::string_view kPrintedSNum =
    "1712282664960*psi^3*chi^6 + 1528823808*psi^4*chi^6 + 49941577728*psi^4*chi^5"
    " - 38928384*psi^5*chi^5 - 258048*psi^6*chi^4 + 12386304*psi^6*chi^3 + 901736973729792*psi*chi^10"
    " + 966131712*psi^5*chi^4 + 16231265527136256*chi^10 + 480*psi^8*chi + 101376*psi^7*chi^2"
    " + 479047767293952*psi*chi^8 + 7827577896960*psi^2*chi^9 + 2705210921189376*chi^9"
    " + 21641687369515008*chi^12 + 32462531054272512*chi^11 + psi^9"
    " + 619683250176*psi^3*chi^7 + 1408964021452800*psi*chi^9 + 45595641249792*psi^2*chi^8"
    " + 7247757312*psi^3*chi^8 + 37572373905408*psi^2*chi^7";

constexpr std::string_view kPrintedTBase =
    "84934656*chi^5 + 1179648*chi^4*psi - 5308416*chi^4 - 442368*chi^3*psi - 13824*chi^2*psi^2"
    " - 192*chi*psi^3 - psi^4";

constexpr std::string_view kPrintedS3 =
    "2^28*3^6*chi^8 + 2^28*3^6*chi^7 - 2^23*3^5*(psi - 24)*chi^6 - 2^22*3^3*psi*(psi - 45)*chi^5"
    " - 2^15*psi^2*(23*psi - 6642)*chi^4 + 2^14*3^3*11*psi^3*chi^3 + 2^9*3^2*13*psi^4*chi^2"
    " + 2^7*3*psi^5*chi + psi^6";

constexpr std::string_view kPrintedJ2 = "chi*(chi^2 + 96*chi*psi - 1152*psi^2)";
constexpr std::string_view kPrintedJ4 =
    "chi/2^6*(chi^5 + 192*chi^4*psi + 13824*chi^3*psi^2 + 442368*chi^2*psi^3 + 5308416*chi*psi^4"
    " + 786432*chi*psi^3 + 9437184*psi^4)";
constexpr std::string_view kPrintedJ6 =
    "chi/2^9*(3*chi^8 + 864*chi^7*psi + 94464*chi^6*psi^2 + 4866048*chi^5*psi^3 + 111476736*chi^4*psi^4"
    " + 509607936*chi^3*psi^5 - 12230590464*chi^2*psi^6 + 1310720*chi^4*psi^3 + 155713536*chi^3*psi^4"
    " - 1358954496*chi^2*psi^5 - 18119393280*chi*psi^6 + 4831838208*psi^6)";
constexpr std::string_view kPrintedJ10 = "-2^30*chi^3*psi^9";

constexpr std::string_view kPrintedN2Genus0 =
    "psi^9 + 10820843684757504*chi^12 + 16231265527136256*chi^11 + 4057816381784064*chi^10*psi"
    " + 2348273369088*chi^8*psi^3 + 8115632763568128*chi^10 + 253613523861504*chi^9*psi"
    " - 1834588569600*chi^7*psi^3 - 45864714240*chi^6*psi^4 - 525533184*chi^5*psi^5 - 2322432*chi^4*psi^6"
    " + 1352605460594688*chi^9 + 253613523861504*chi^8*psi + 21134460321792*chi^7*psi^2"
    " + 32105299968*chi^5*psi^4 + 668860416*chi^4*psi^5 + 9289728*chi^3*psi^6 + 82944*chi^2*psi^7"
    " + 432*chi*psi^8 + 190210142896128*chi^9*psi^2 - 26418075402240*chi^8*psi^2"
    " + 1027369598976*chi^6*psi^3";

Split3Forms build_forms() {
    Split3Forms f{cp(kSNum),
                  cp(kTBase),
                  cp(kS3),
                  cp(kW),
                  {cp(kJ2), cp(kJ4), cp(kJ6), cp(kJ10)},
                  to_integer_poly(cp(kN2Genus0)),
                  cp(kPrintedSNum),
                  cp(kPrintedTBase),
                  cp(kPrintedS3),
                  {cp(kPrintedJ2), cp(kPrintedJ4), cp(kPrintedJ6), cp(kPrintedJ10)},
                  to_integer_poly(cp(kPrintedN2Genus0))};
    return f;
}

}  // namespace

const Split3Forms& split3_forms() {
    static const Split3Forms forms = build_forms();
    return forms;
}

std::pair<RationalParam, RationalParam> split3_st_params() {
    const auto& f = split3_forms();
    RationalParam s{f.s_num, BiPoly<Rational>::monomial(Rational(1), 4, 6)};
    RationalParam t{f.t_base.pow(3), BiPoly<Rational>::monomial(Rational(2176782336L), 3, 9)};
    return {s, t};
}

BiPoly<Integer> split3_eliminated_locus(int N, LocusCache& cache) {
    if (!is_supported_level(N)) throw Error(ErrorKind::unsupported, "unsupported isogeny level " + std::to_string(N));
    return cache.get(3, N, [N] {
        auto [s, t] = split3_st_params();
        return eliminate_locus(phi(N).st, s, t);
    });
}

std::vector<BiPoly<Integer>> split3_isogeny_locus(int N, LocusCache& cache) {
    if (!is_supported_level(N)) throw Error(ErrorKind::unsupported, "unsupported isogeny level " + std::to_string(N));
    auto g = split3_eliminated_locus(N, cache);
    if (N != 2) return {g};
    // The genus-zero component has constant leading coefficient in chi:
    // divide with the variables swapped.
    const auto& g0 = split3_forms().n2_genus0;
    auto [q, exact] = divide_by(g.swapped().convert(Rational(0)), g0.swapped().convert(Rational(0)));
    if (!exact) throw Error(ErrorKind::integrity, "genus-zero component does not divide the N = 2 locus");
    return {g0, primitive_part(q.swapped()).first};
}

}  // namespace g2split
