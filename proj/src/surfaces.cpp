#include "g2split/surfaces.hpp"

namespace g2split {

namespace {

constexpr std::string_view kBracket =
    "(chi^5 + 192*chi^4*psi + 13824*chi^3*psi^2 + 442368*chi^2*psi^3 + 5308416*chi*psi^4"
    " + 786432*chi*psi^3 + 9437184*psi^4)";

constexpr std::string_view kQuad = "(chi^2 + 96*chi*psi - 1152*psi^2)";

constexpr std::string_view kGammaBracket =
    "(3*chi^8 + 864*chi^7*psi + 94464*chi^6*psi^2 + 4866048*chi^5*psi^3 + 111476736*chi^4*psi^4"
    " + 509607936*chi^3*psi^5 - 12230590464*chi^2*psi^6 + 1310720*chi^4*psi^3 + 155713536*chi^3*psi^4"
    " - 1358954496*chi^2*psi^5 - 18119393280*chi*psi^6 + 4831838208*psi^6)";

SurfaceForms build_forms() {
    auto cp = [](const std::string& t) { return parse_bipoly(t, "chi", "psi"); };
    std::string br(kBracket), q(kQuad), g(kGammaBracket);
    return {{cp("chi*" + br + "/256"), cp("chi^2*" + q + "*" + br + "/512"), cp("-3*chi*" + g + "/4096"),
             cp("-2^25*3^5*chi^4*" + q + "*psi^9")}};
}

}  // namespace

const SurfaceForms& surface_forms() {
    static const SurfaceForms forms = build_forms();
    return forms;
}

}  // namespace g2split
