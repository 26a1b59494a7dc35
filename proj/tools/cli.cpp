#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "g2split/ffcrypto.hpp"
#include "g2split/genus2.hpp"
#include "g2split/split2.hpp"
#include "g2split/split3.hpp"
#include "g2split/surfaces.hpp"
#include "g2split/validate.hpp"

using json = nlohmann::ordered_json;
using namespace g2split;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitUnresolved = 3;

template <class F>
F elem(const std::string& text, const F& like) {
    return convert_like(like, parse_rational(text));
}

template <class Fn>
void with_field(const std::string& field, Fn&& fn) {
    auto spec = FieldSpec::parse(field);
    switch (spec.kind) {
        case FieldSpec::Kind::rationals: fn(Rational(0)); break;
        case FieldSpec::Kind::prime: fn(Fp(0, spec.p)); break;
        case FieldSpec::Kind::prime_square: throw Error(ErrorKind::unsupported, "this command works over Q or F_p");
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

template <class F>
json poly_json(const UniPoly<F>& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(to_string(p.coeff(i)));
    return a;
}

template <class F>
json divisor_json(const MumfordDivisor<F>& d) {
    return {{"u", poly_json(d.u)}, {"v", poly_json(d.v)}};
}

template <class F>
UniPoly<F> poly_from_json(const json& a, const F& like) {
    if (!a.is_array()) throw Error(ErrorKind::invalid_input, "expected a coefficient array");
    std::vector<F> c;
    for (const auto& x : a) c.push_back(elem(x.is_string() ? x.get<std::string>() : x.dump(), like));
    if (c.empty()) c.push_back(zero_like(like));
    return UniPoly<F>(c, zero_like(like));
}

template <class F>
MumfordDivisor<F> divisor_from_text(const std::string& text, const F& like) {
    json j = json::parse(text);
    return {poly_from_json(j.at("u"), like), poly_from_json(j.at("v"), like)};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::invalid_input, "cannot read " + path);
    return json::parse(in);
}

template <class F>
json jq_json(const JQuadratic<F>& q) {
    return {{"s", to_string(q.s)}, {"t", to_string(q.t)}};
}

template <class F>
json si_json(const ShiodaInoseParams<F>& p) {
    return {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"gamma", to_string(p.gamma)},
            {"delta", to_string(p.delta)}};
}

json lpoly_json(const LPolynomial& l) {
    json c = json::array();
    for (const auto& x : l.coefficients()) c.push_back(x.get_str());
    return {{"q", l.q.get_str()}, {"genus", l.genus}, {"coefficients", c}, {"jacobian_order", l.at_one().get_str()},
            {"text", to_string(l)}};
}

// ---------------------------------------------------------------------------

struct Split2Args {
    std::optional<std::string> s1, s2, u, v;
    std::string field = "Q";
};

template <class F>
json run_split2(const Split2Args& a, const F& like) {
    json out;
    out["field"] = FieldSpec::parse(a.field).label();
    F u, v;
    if (a.s1 && a.s2) {
        F s1 = elem(*a.s1, like), s2 = elem(*a.s2, like);
        Split2Curve<F> c(s1, s2);
        auto d = dihedral_invariants(s1, s2);
        u = d.u;
        v = d.v;
        auto [j1, j2] = c.j_invariants();
        out["s1"] = to_string(s1);
        out["s2"] = to_string(s2);
        out["curve"] = to_string(c.curve().f(), "X");
        out["j1"] = to_string(j1);
        out["j2"] = to_string(j2);
    } else if (a.u && a.v) {
        u = elem(*a.u, like);
        v = elem(*a.v, like);
        if (auto js = j_pair_from_uv(u, v)) {
            out["j1"] = to_string(js->first);
            out["j2"] = to_string(js->second);
        }
    } else {
        throw CLI::ValidationError("split2", "give --s1 --s2 or --u --v");
    }
    out["u"] = to_string(u);
    out["v"] = to_string(v);
    out["delta"] = to_string(delta_uv(u, v));
    out["j_quadratic"] = jq_json(j_quadratic(u, v));
    out["S2"] = to_string(s2_surface(u, v));
    out["stratum"] = to_string(aut_stratum(u, v));
    return out;
}

struct Split3Args {
    std::optional<std::string> fu, fv, chi, psi;
    std::string field = "Q";
};

template <class F>
json run_split3(const Split3Args& a, const F& like) {
    json out;
    out["field"] = FieldSpec::parse(a.field).label();
    F chi, psi;
    if (a.fu && a.fv) {
        Split3Curve<F> c(elem(*a.fu, like), elem(*a.fv, like));
        std::tie(chi, psi) = c.chi_psi();
        auto [j1, j2] = c.j_invariants();
        out["fu"] = to_string(c.u());
        out["fv"] = to_string(c.v());
        out["curve"] = to_string(c.curve().f(), "X");
        out["j1"] = to_string(j1);
        out["j2"] = to_string(j2);
    } else if (a.chi && a.psi) {
        chi = elem(*a.chi, like);
        psi = elem(*a.psi, like);
    } else {
        throw CLI::ValidationError("split3", "give --fu --fv or --chi --psi");
    }
    out["chi"] = to_string(chi);
    out["psi"] = to_string(psi);
    out["j_quadratic"] = jq_json(st_from_chipsi(chi, psi));
    out["S3"] = to_string(s3_surface(chi, psi));
    auto j = igusa_from_chipsi(chi, psi);
    out["igusa"] = {{"J2", to_string(j.J2)}, {"J4", to_string(j.J4)}, {"J6", to_string(j.J6)}, {"J10", to_string(j.J10)}};
    return out;
}

struct IsogenyArgs {
    int n = 2;
    int N = 2;
    std::string point;
    std::string field = "Q";
};

template <class F>
json run_isogeny(const IsogenyArgs& a, const F& like) {
    auto xy = split_list(a.point);
    if (xy.size() != 2) throw CLI::ValidationError("--point", "expected two comma-separated values");
    F x = elem(xy[0], like), y = elem(xy[1], like);
    json out;
    out["n"] = a.n;
    out["N"] = a.N;
    out["point"] = {to_string(x), to_string(y)};
    std::vector<F> vals;
    std::optional<std::pair<F, F>> js;
    if (a.n == 2) {
        vals = isogeny_locus_eval(a.N, x, y);
        js = j_pair_from_uv(x, y);
    } else if (a.n == 3) {
        vals = isogeny_locus3_eval(a.N, x, y);
        auto q = st_from_chipsi(x, y);
        F disc = q.s * q.s - from_int_like(x, 4) * q.t;
        if (is_square(disc)) {
            F r = square_root(disc), half = one_like(x) / from_int_like(x, 2);
            js = std::make_pair((q.s + r) * half, (q.s - r) * half);
        }
    } else {
        throw CLI::ValidationError("--n", "n must be 2 or 3");
    }
    json fv = json::array();
    bool on = false;
    for (const auto& v : vals) {
        fv.push_back(to_string(v));
        on = on || is_zero(v);
    }
    out["factor_values"] = fv;
    out["on_locus"] = on;
    if (js) {
        out["j1"] = to_string(js->first);
        out["j2"] = to_string(js->second);
        out["are_isogenous"] = are_isogenous(js->first, js->second, a.N);
    }
    return out;
}

struct JacArgs {
    std::string curve;
    std::string op;
    std::string d1, d2;
    std::string k = "1";
    std::string point;
};

template <class F>
std::optional<MumfordDivisor<F>> first_divisor(const JacArgs& a, const Genus2Curve<F>& c, const F& like) {
    if (!a.d1.empty()) return divisor_from_text(a.d1, like);
    if (a.point.empty()) return std::nullopt;
    auto xy = split_list(a.point);
    if (xy.size() != 2) throw CLI::ValidationError("--point", "expected x,y");
    return point_divisor(elem(xy[0], like), elem(xy[1], like), c);
}

template <class F>
json run_jac(const JacArgs& a, const json& file, const F& like) {
    Genus2Curve<F> c(poly_from_json(file.at("f"), like));
    json out;
    out["curve"] = poly_json(c.f());
    if (a.op == "order") {
        if constexpr (std::is_same_v<F, Fp>) {
            auto l = lpoly(c.f());
            out["jacobian_order"] = l.at_one().get_str();
            if (auto d = first_divisor(a, c, like)) {
                out["divisor"] = divisor_json(*d);
                out["order_kills_divisor"] = scalar_mul(l.at_one(), *d, c).is_identity();
            }
        } else {
            throw Error(ErrorKind::unsupported, "order needs a prime field");
        }
        return out;
    }
    auto given = first_divisor(a, c, like);
    if (!given) throw CLI::ValidationError("--d1", "divisor required (--d1 or --point)");
    auto d1 = *given;
    if (!is_valid_divisor(d1, c.f())) throw Error(ErrorKind::invalid_input, "d1 is not a reduced divisor on the curve");
    if (a.op == "add") {
        if (a.d2.empty()) throw CLI::ValidationError("--d2", "divisor required");
        auto d2 = divisor_from_text(a.d2, like);
        if (!is_valid_divisor(d2, c.f())) throw Error(ErrorKind::invalid_input, "d2 is not a reduced divisor on the curve");
        out["sum"] = divisor_json(cantor_add(d1, d2, c));
    } else if (a.op == "mul") {
        out["product"] = divisor_json(scalar_mul(parse_integer(a.k), d1, c));
    } else {
        throw CLI::ValidationError("--op", "op must be add, mul or order");
    }
    return out;
}

json report_json(const ValidationReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"formula_id", e.formula_id},
                           {"location", e.location},
                           {"status", to_string(e.status)},
                           {"witness", e.witness},
                           {"printed", e.printed},
                           {"oracle", e.oracle},
                           {"points", std::to_string(e.points)},
                           {"printed_failures", std::to_string(e.printed_failures)}});
    return {{"seed", std::to_string(r.seed)},
            {"points", std::to_string(r.points)},
            {"match", std::to_string(r.count(ValidationStatus::match))},
            {"erratum", std::to_string(r.count(ValidationStatus::erratum))},
            {"unresolved", std::to_string(r.count(ValidationStatus::unresolved))},
            {"entries", entries}};
}

json row_json(const RestrictionRow& r) {
    json j{{"p", std::to_string(r.p)},
           {"alpha0", std::to_string(r.alpha0)},
           {"alpha1", std::to_string(r.alpha1)},
           {"valid", r.valid},
           {"reason", r.reason},
           {"supersingular", r.supersingular},
           {"lemma_holds", r.lemma_holds}};
    j["LX"] = r.lx ? lpoly_json(*r.lx) : json(nullptr);
    j["LE"] = r.le ? lpoly_json(*r.le) : json(nullptr);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split genus-2 Jacobians: invariants, isogeny loci, surfaces and finite-field checks"};
    app.require_subcommand(1);

    Split2Args s2;
    auto* c2 = app.add_subcommand("split2", "(2,2)-split family record");
    c2->add_option("--s1", s2.s1);
    c2->add_option("--s2", s2.s2);
    c2->add_option("--u", s2.u);
    c2->add_option("--v", s2.v);
    c2->add_option("--field", s2.field, "Q or a prime p");

    Split3Args s3;
    auto* c3 = app.add_subcommand("split3", "(3,3)-split family record");
    c3->add_option("--fu", s3.fu);
    c3->add_option("--fv", s3.fv);
    c3->add_option("--chi", s3.chi);
    c3->add_option("--psi", s3.psi);
    c3->add_option("--field", s3.field, "Q or a prime p");

    IsogenyArgs iso;
    auto* ci = app.add_subcommand("isogeny", "isogeny locus factor values at a point");
    ci->add_option("--n", iso.n)->check(CLI::IsMember({2, 3}));
    ci->add_option("--N", iso.N)->check(CLI::IsMember({2, 3, 5, 7}));
    ci->add_option("--point", iso.point, "u,v (n = 2) or chi,psi (n = 3)")->required();
    ci->add_option("--field", iso.field, "Q or a prime p");

    JacArgs jac;
    auto* cj = app.add_subcommand("jac", "Jacobian arithmetic on y^2 = f(x), deg f = 5");
    cj->add_option("--curve", jac.curve, "JSON file {\"f\": [a0, ...], \"p\": \"101\"}")->required();
    cj->add_option("--op", jac.op)->required()->check(CLI::IsMember({"add", "mul", "order"}));
    cj->add_option("--d1", jac.d1, "divisor JSON {\"u\": [...], \"v\": [...]}");
    cj->add_option("--d2", jac.d2);
    cj->add_option("--point", jac.point, "x,y: the divisor (x, y) - infinity, used when --d1 is absent");
    cj->add_option("--k", jac.k, "multiplier for mul");

    std::string lp_curve;
    std::uint64_t lp_q = 0;
    auto* cl = app.add_subcommand("lpoly", "L-polynomial over F_p");
    cl->add_option("--curve", lp_curve, "JSON file {\"f\": [a0, ...]}")->required();
    cl->add_option("--q", lp_q, "prime p")->required();

    std::string sf_from, sf_ic, sf_u, sf_v, sf_chi, sf_psi;
    auto* cs = app.add_subcommand("surface", "Shioda-Inose parameters and quartic");
    cs->add_option("--from", sf_from)->required()->check(CLI::IsMember({"ic", "uv", "chipsi"}));
    cs->add_option("--ic", sf_ic, "I2,I4,I6,I10");
    cs->add_option("--u", sf_u);
    cs->add_option("--v", sf_v);
    cs->add_option("--chi", sf_chi);
    cs->add_option("--psi", sf_psi);

    std::uint64_t sc_p = 0;
    std::optional<std::size_t> sc_limit;
    std::string sc_out;
    bool sc_json = false;
    unsigned sc_workers = 1;
    auto* cc = app.add_subcommand("ss-scan", "Weil-restriction scan over alpha in F_{p^2}");
    cc->add_option("--p", sc_p)->required();
    cc->add_option("--limit", sc_limit);
    cc->add_option("--out", sc_out, "CSV file (stdout when absent)");
    cc->add_flag("--json", sc_json, "JSON instead of CSV");
    cc->add_option("--workers", sc_workers)->check(CLI::Range(1u, 64u));

    std::uint64_t va_seed = 1;
    std::size_t va_points = 50;
    std::string va_out;
    auto* cv = app.add_subcommand("validate", "check every displayed formula against its oracle");
    cv->add_option("--seed", va_seed);
    cv->add_option("--points", va_points)->check(CLI::PositiveNumber);
    cv->add_option("--out", va_out, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        json out;
        if (*c2) {
            with_field(s2.field, [&](const auto& like) { out = run_split2(s2, like); });
        } else if (*c3) {
            with_field(s3.field, [&](const auto& like) { out = run_split3(s3, like); });
        } else if (*ci) {
            with_field(iso.field, [&](const auto& like) { out = run_isogeny(iso, like); });
        } else if (*cj) {
            json file = read_json_file(jac.curve);
            std::string field = file.contains("p") ? file["p"].get<std::string>() : "Q";
            with_field(field, [&](const auto& like) { out = run_jac(jac, file, like); });
        } else if (*cl) {
            json file = read_json_file(lp_curve);
            require_odd_prime(lp_q);
            out = lpoly_json(lpoly(poly_from_json(file.at("f"), Fp(0, lp_q))));
        } else if (*cs) {
            std::optional<ShiodaInoseParams<Rational>> p;
            if (sf_from == "ic") {
                auto v = split_list(sf_ic);
                if (v.size() != 4) throw CLI::ValidationError("--ic", "expected I2,I4,I6,I10");
                p = si_from_igusa_clebsch(IgusaClebsch<Rational>{parse_rational(v[0]), parse_rational(v[1]),
                                                                 parse_rational(v[2]), parse_rational(v[3])});
            } else if (sf_from == "uv") {
                if (sf_u.empty() || sf_v.empty()) throw CLI::ValidationError("surface", "--u and --v required");
                p = si_from_uv(parse_rational(sf_u), parse_rational(sf_v));
            } else {
                if (sf_chi.empty() || sf_psi.empty()) throw CLI::ValidationError("surface", "--chi and --psi required");
                p = si_from_chipsi(parse_rational(sf_chi), parse_rational(sf_psi));
            }
            out["params"] = si_json(*p);
            out["quartic"] = to_string(si_quartic(*p), {"W", "X", "Y", "Z"});
        } else if (*cc) {
            auto rows = ss_scan(sc_p, sc_limit, sc_workers);
            std::ostringstream os;
            if (sc_json) {
                json a = json::array();
                for (const auto& r : rows) a.push_back(row_json(r));
                os << a.dump(2) << '\n';
            } else {
                os << scan_csv_header() << '\n';
                for (const auto& r : rows) os << to_csv(r) << '\n';
            }
            if (sc_out.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream f(sc_out);
                if (!f) throw Error(ErrorKind::invalid_input, "cannot write " + sc_out);
                f << os.str();
            }
            return 0;
        } else if (*cv) {
            auto r = validate(va_seed, va_points);
            json j = report_json(r);
            if (va_out.empty()) {
                std::cout << j.dump(2) << '\n';
            } else {
                std::ofstream f(va_out);
                if (!f) throw Error(ErrorKind::invalid_input, "cannot write " + va_out);
                f << j.dump(2) << '\n';
            }
            for (const auto& e : r.entries) std::cerr << to_string(e.status) << "  " << e.formula_id << '\n';
            std::cerr << r.count(ValidationStatus::match) << " match, " << r.count(ValidationStatus::erratum)
                      << " erratum, " << r.count(ValidationStatus::unresolved) << " unresolved\n";
            return r.has_unresolved() ? kExitUnresolved : 0;
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const Error& e) {
        std::cerr << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
        return e.kind() == ErrorKind::resource ? kExitResource : kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", "invalid_input"}, {"message", e.what()}}.dump() << '\n';
        return kExitUsage;
    }
}
