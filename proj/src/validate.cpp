#include "g2split/validate.hpp"

#include <functional>
#include <optional>
#include <random>

#include "g2split/ffcrypto.hpp"
#include "g2split/surfaces.hpp"

namespace g2split {

namespace {

struct Probe {
    std::string point;
    std::string printed;
    std::string oracle;
    bool printed_ok = false;
    bool corrected_ok = false;
};

std::string tuple(std::initializer_list<std::string> xs) {
    std::string out = "(";
    for (const auto& x : xs) out += (out.size() > 1 ? ", " : "") + x;
    return out + ")";
}
std::string str(const Rational& q) { return to_string(q); }
template <class V>
std::string str_vec(const V& v) {
    std::string out = "(";
    for (const auto& x : v) out += (out.size() > 1 ? ", " : "") + to_string(x);
    return out + ")";
}
std::string str_j(const IgusaJ<Rational>& j) { return str_vec(std::vector<Rational>{j.J2, j.J4, j.J6, j.J10}); }
std::string str_si(const ShiodaInoseParams<Rational>& p) { return str_vec(p.as_vector()); }

ValidationEntry classify(std::string id, std::string location, const std::vector<Probe>& probes) {
    ValidationEntry e;
    e.formula_id = std::move(id);
    e.location = std::move(location);
    e.points = probes.size();
    const Probe* first_bad = nullptr;
    bool corrected = true;
    for (const auto& p : probes) {
        if (!p.printed_ok) {
            ++e.printed_failures;
            if (!first_bad) first_bad = &p;
        }
        corrected = corrected && p.corrected_ok;
    }
    const Probe* w = first_bad ? first_bad : (probes.empty() ? nullptr : &probes.front());
    if (w) {
        e.witness = w->point;
        e.printed = w->printed;
        e.oracle = w->oracle;
    }
    if (probes.empty()) e.status = ValidationStatus::unresolved;
    else if (!first_bad) e.status = ValidationStatus::match;
    else e.status = corrected ? ValidationStatus::erratum : ValidationStatus::unresolved;
    return e;
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    Rational rational(long height = 30, long den = 7) {
        return make_rational(static_cast<long>(rng_() % static_cast<std::uint64_t>(2 * height + 1)) - height,
                             static_cast<long>(rng_() % static_cast<std::uint64_t>(den)) + 1);
    }
    std::pair<Rational, Rational> s1s2() {
        for (;;) {
            Rational a = rational(), b = rational();
            if (delta_s(a, b) != 0) return {a, b};
        }
    }
    // Admissible (fu, fv) with chi psi != 0 and the second cover defined.
    std::pair<Rational, Rational> fufv() {
        for (;;) {
            Rational u = rational(20, 5), v = rational(20, 5);
            if (v == 0 || v == 27 || split3_R(u, v) == 0 || 4 * u - v - 9 == 0 || v - 9 - 2 * u == 0) continue;
            return {u, v};
        }
    }
    UniPoly<Rational> sextic() {
        for (;;) {
            std::vector<Rational> c;
            for (int i = 0; i < 7; ++i) c.push_back(rational(9, 3));
            if (c[6] == 0) continue;
            UniPoly<Rational> f(c, Rational(0));
            if (discriminant(f) != 0) return f;
        }
    }

private:
    std::mt19937_64 rng_;
};

std::string pt2(const char* a, const Rational& x, const char* b, const Rational& y) {
    return std::string(a) + "=" + str(x) + ", " + b + "=" + str(y);
}

// ---------------------------------------------------------------------------

ValidationEntry check_igusa_j(Sampler& s, std::size_t n) {
    std::vector<Probe> probes;
    for (std::size_t i = 0; i < n; ++i) {
        auto f = s.sextic();
        Rational c = s.rational(5, 3), lam = s.rational(5, 3);
        if (lam == 0) lam = 2;
        auto g = f.compose(UniPoly<Rational>({c, lam}, Rational(0)));
        auto a = igusa_j(Genus2Curve<Rational>(f));
        auto b = igusa_j(Genus2Curve<Rational>(g));
        auto ic = igusa_clebsch(Genus2Curve<Rational>(f));
        auto back = clebsch_from_igusa(a);
        bool ok = weighted_equal(a, b) && back.I2 == ic.I2 && back.I4 == ic.I4 && back.I6 == ic.I6 && back.I10 == ic.I10;
        probes.push_back({"f=" + to_string(f) + ", x -> " + str(lam) + "x + " + str(c), str_j(a), str_j(b), ok, ok});
    }
    return classify("genus2.igusa_from_clebsch", "igusa_from_clebsch / clebsch_from_igusa", probes);
}

ValidationEntry check_phi_st(int N) {
    auto xy = printed_phi_xy(N);
    auto reduced = xy_to_st(xy);
    bool ok = xy.is_symmetric() && reduced == printed_phi_st(N);
    Probe p{"symbolic", "phi_" + std::to_string(N) + "(s, t) displayed", ok ? "equal to reduction of phi(x, y)" : "differs",
            ok, ok};
    return classify("modular.phi" + std::to_string(N) + "_st", "printed_phi_st", {p});
}

template <class Fn>
std::vector<Probe> over_s1s2(Sampler& s, std::size_t n, Fn&& fn) {
    std::vector<Probe> probes;
    for (std::size_t i = 0; i < n; ++i) {
        auto [s1, s2] = s.s1s2();
        probes.push_back(fn(s1, s2));
    }
    return probes;
}

std::vector<ValidationEntry> check_split2(Sampler& s, std::size_t n) {
    std::vector<ValidationEntry> out;
    auto ctx = [](const Rational& s1, const Rational& s2) {
        auto [j1, j2] = Split2Curve<Rational>(s1, s2).j_invariants();
        auto uv = dihedral_invariants(s1, s2);
        return std::make_tuple(j1, j2, uv.u, uv.v);
    };

    out.push_back(classify("split2.elliptic_j", "Split2Curve::j_invariants",
                           over_s1s2(s, n, [](const Rational& s1, const Rational& s2) {
                               Split2Curve<Rational> c(s1, s2);
                               auto [j1, j2] = c.j_invariants();
                               auto [e1, e2] = c.elliptic_components();
                               Rational o1 = j_invariant_cubic(e1), o2 = j_invariant_cubic(e2);
                               bool ok = j1 == o1 && j2 == o2;
                               return Probe{pt2("s1", s1, "s2", s2), tuple({str(j1), str(j2)}), tuple({str(o1), str(o2)}), ok, ok};
                           })));
    out.push_back(classify("split2.j_quadratic_s", "printed_j_quadratic (s)",
                           over_s1s2(s, n, [&](const Rational& s1, const Rational& s2) {
                               auto [j1, j2, u, v] = ctx(s1, s2);
                               Rational pr = printed_j_quadratic(u, v).s, orc = j1 + j2;
                               return Probe{pt2("u", u, "v", v), str(pr), str(orc), pr == orc, j_quadratic(u, v).s == orc};
                           })));
    out.push_back(classify("split2.j_quadratic_t", "printed_j_quadratic (t)",
                           over_s1s2(s, n, [&](const Rational& s1, const Rational& s2) {
                               auto [j1, j2, u, v] = ctx(s1, s2);
                               Rational pr = printed_j_quadratic(u, v).t, orc = j1 * j2;
                               return Probe{pt2("u", u, "v", v), str(pr), str(orc), pr == orc, j_quadratic(u, v).t == orc};
                           })));
    out.push_back(classify("split2.s2_surface", "printed_s2",
                           over_s1s2(s, n, [&](const Rational& s1, const Rational& s2) {
                               auto [j1, j2, u, v] = ctx(s1, s2);
                               Rational d = delta_uv(u, v);
                               Rational orc = (j1 - j2) * (j1 - j2) * d * d / 65536;
                               Rational pr = printed_s2(u, v);
                               return Probe{pt2("u", u, "v", v), str(pr), str(orc), pr == orc, s2_surface(u, v) == orc};
                           })));

    auto locus = [](int N, const BiPoly<Integer>& printed_product, const char* id, const char* loc) {
        auto g = split2_eliminated_locus(N);
        auto prim = primitive_part(printed_product.convert(Rational(0))).first;
        bool ok = prim == g;
        Probe p{"symbolic", "primitive part of displayed factors, " + std::to_string(prim.total_degree()) + " total degree",
                "eliminated locus, " + std::to_string(g.total_degree()) + " total degree", ok, true};
        return classify(id, loc, {p});
    };
    out.push_back(locus(2, printed_f1() * printed_f2(), "split2.isogeny_locus_N2", "printed_f1 * printed_f2"));
    out.push_back(locus(3, d6_line() * printed_g1() * printed_g2(), "split2.isogeny_locus_N3",
                        "d6_line * printed_g1 * printed_g2"));

    std::vector<Probe> d4;
    for (long k = -static_cast<long>(n); d4.size() < std::max<std::size_t>(n, 30); ++k) {
        Rational w = make_rational(k, 3);
        if (w == -1) continue;
        auto [j, jp] = d4_pair(w);
        Rational val = eval_phi(phi(2), j, jp);
        d4.push_back({"w=" + str(w), str(val), "0", val == 0, val == 0});
    }
    out.push_back(classify("split2.d4_pair", "d4_pair", d4));
    return out;
}

std::vector<ValidationEntry> check_split3(Sampler& s, std::size_t n) {
    std::vector<ValidationEntry> out;
    std::vector<std::pair<Rational, Rational>> pts{{Rational(1), Rational(1)}};
    while (pts.size() < n) pts.push_back(s.fufv());
    auto run = [&](const char* id, const char* loc,
                   const std::function<Probe(const Split3Curve<Rational>&, const std::string&)>& fn) {
        std::vector<Probe> probes;
        for (const auto& [u, v] : pts) probes.push_back(fn(Split3Curve<Rational>(u, v), pt2("fu", u, "fv", v)));
        out.push_back(classify(id, loc, probes));
    };

    run("split3.chi_psi", "Split3Curve::chi_psi", [](const auto& c, const std::string& at) {
        auto [f1, f2] = c.cubics();
        auto a = c.chi_psi(), b = chi_psi_from_cubics(f1, f2);
        bool ok = a == b;
        return Probe{at, tuple({str(a.first), str(a.second)}), tuple({str(b.first), str(b.second)}), ok, ok};
    });
    run("split3.elliptic_j", "Split3Curve::j_invariants", [](const auto& c, const std::string& at) {
        auto [j1, j2] = c.j_invariants();
        Rational o1 = j_invariant_cubic(c.elliptic_component1()), o2 = j_invariant_cubic(c.elliptic_component2());
        bool ok = j1 == o1 && j2 == o2;
        return Probe{at, tuple({str(j1), str(j2)}), tuple({str(o1), str(o2)}), ok, ok};
    });
    for (int which : {1, 2}) {
        std::string id = "split3.cover" + std::to_string(which);
        run(id.c_str(), "Split3Curve::printed_covers", [which](const auto& c, const std::string& at) {
            auto f = c.curve().f();
            auto e = which == 1 ? c.elliptic_component1() : c.elliptic_component2();
            auto pc = c.printed_covers(), cc = c.corrected_covers();
            auto pr = cover_residual(which == 1 ? pc.first : pc.second, e, f);
            auto co = cover_residual(which == 1 ? cc.first : cc.second, e, f);
            std::string shown = pr.is_zero() ? "0" : "nonzero residual, numerator degree " + std::to_string(pr.num().degree());
            return Probe{at, "E(U) - k f W^2 = " + shown, "0", pr.is_zero(), co.is_zero()};
        });
    }
    run("split3.j_quadratic_s", "printed_st_from_chipsi (s)", [](const auto& c, const std::string& at) {
        auto [h, k] = c.chi_psi();
        auto [j1, j2] = c.j_invariants();
        Rational pr = printed_st_from_chipsi(h, k).s;
        return Probe{at, str(pr), str(j1 + j2), pr == j1 + j2, st_from_chipsi(h, k).s == j1 + j2};
    });
    run("split3.j_quadratic_t", "printed_st_from_chipsi (t)", [](const auto& c, const std::string& at) {
        auto [h, k] = c.chi_psi();
        auto [j1, j2] = c.j_invariants();
        Rational pr = printed_st_from_chipsi(h, k).t;
        return Probe{at, str(pr), str(j1 * j2), pr == j1 * j2, st_from_chipsi(h, k).t == j1 * j2};
    });
    // On the family both j's are rational, so S3 must be a square there.
    run("split3.s3_surface", "printed_s3", [](const auto& c, const std::string& at) {
        auto [h, k] = c.chi_psi();
        auto [j1, j2] = c.j_invariants();
        Rational pr = printed_s3(h, k);
        Rational w = s3_cofactor(h, k);
        Rational scale = Rational(Integer("1624959306694656")) * power(h, 8) * power(k, 12);
        bool corrected = (j1 - j2) * (j1 - j2) * scale == s3_surface(h, k) * w * w;
        return Probe{at, str(pr) + (is_square(pr) ? " (square)" : " (not a square)"),
                     "square class of (j1 - j2)^2 = " + str((j1 - j2) * (j1 - j2)), is_square(pr), corrected};
    });
    run("split3.igusa", "printed_igusa_from_chipsi", [](const auto& c, const std::string& at) {
        auto [h, k] = c.chi_psi();
        auto ref = igusa_j(c.curve());
        auto pr = printed_igusa_from_chipsi(h, k);
        return Probe{at, str_j(pr), str_j(ref), weighted_equal(pr, ref), weighted_equal(igusa_from_chipsi(h, k), ref)};
    });
    run("surfaces.si_from_chipsi", "printed_si_from_chipsi", [](const auto& c, const std::string& at) {
        auto [h, k] = c.chi_psi();
        auto ref = si_from_curve(c.curve());
        auto pr = printed_si_from_chipsi(h, k);
        return Probe{at, str_si(pr), str_si(ref), weighted_si_equal(pr, ref), weighted_si_equal(si_from_chipsi(h, k), ref)};
    });

    {
        auto g = split3_eliminated_locus(2);
        auto printed = split3_forms().printed_n2_genus0;
        auto [q, exact] = divide_by(g.swapped().convert(Rational(0)), printed.swapped().convert(Rational(0)));
        auto corrected = split3_isogeny_locus(2).front();
        auto [q2, exact2] = divide_by(g.swapped().convert(Rational(0)), corrected.swapped().convert(Rational(0)));
        Probe p{"symbolic", exact ? "divides the eliminated locus" : "does not divide the eliminated locus",
                "corrected genus-zero factor divides", exact, exact2};
        out.push_back(classify("split3.isogeny_locus_N2_genus0", "split3_forms().printed_n2_genus0", {p}));
    }
    return out;
}

ValidationEntry check_si_uv(Sampler& s, std::size_t n) {
    return classify("surfaces.si_from_uv", "si_from_uv", over_s1s2(s, n, [](const Rational& s1, const Rational& s2) {
                        auto uv = dihedral_invariants(s1, s2);
                        auto ref = si_from_curve(Split2Curve<Rational>(s1, s2).curve());
                        auto pr = si_from_uv(uv.u, uv.v);
                        bool ok = weighted_si_equal(pr, ref);
                        return Probe{pt2("u", uv.u, "v", uv.v), str_si(pr), str_si(ref), ok, ok};
                    }));
}

ValidationEntry check_geometric_quadratic(Sampler& s, std::size_t n) {
    std::vector<Probe> probes;
    const Rational z(0);
    while (probes.size() < n) {
        std::vector<Rational> xs;
        while (xs.size() < 4) {
            Rational x = s.rational(9, 3);
            bool fresh = x != 0;
            for (const auto& e : xs) fresh = fresh && e != x;
            if (fresh) xs.push_back(x);
        }
        UniPoly<Rational> g({s.rational(), s.rational(), s.rational(), s.rational(9, 3)}, z);
        if (g.degree() != 3) continue;
        Rational b0 = g.coeff(3);
        UniPoly<Rational> q({s.rational(), s.rational(), b0 * b0}, z);
        UniPoly<Rational> known = UniPoly<Rational>::constant(Rational(1));
        for (const auto& x : xs) known = known * UniPoly<Rational>::linear_root(x);
        UniPoly<Rational> f = g * g - known * q;
        if (f.degree() != 5 || discriminant(f) == 0) continue;
        auto oracle = (g * g - f).divexact(known).monic();
        auto pr = printed_geometric_quadratic(xs, g, f);
        auto co = geometric_quadratic(xs, g, f);
        probes.push_back({"f=" + to_string(f) + ", g=" + to_string(g) + ", x_i=" + str_vec(xs), to_string(pr),
                          to_string(oracle), pr == oracle, co == oracle});
    }
    return classify("genus2.geometric_add_quadratic", "printed_geometric_quadratic", probes);
}

ValidationEntry check_lift() {
    std::vector<Probe> probes;
    for (std::uint64_t p : {7u, 11u}) {
        for (const auto& r : ss_scan(p)) {
            if (!r.valid) continue;
            std::string at = "p=" + std::to_string(p) + ", alpha=" + std::to_string(r.alpha0) + "+" +
                             std::to_string(r.alpha1) + "i";
            probes.push_back({at, "L_X = " + to_string(*r.lx), "L_E(T^2), L_E = " + to_string(*r.le), r.lemma_holds,
                              r.lemma_holds});
        }
    }
    return classify("ffcrypto.lift_to_genus2", "lift_to_genus2", probes);
}

}  // namespace

const char* to_string(ValidationStatus s) {
    switch (s) {
        case ValidationStatus::match: return "match";
        case ValidationStatus::erratum: return "erratum";
        case ValidationStatus::unresolved: return "unresolved";
    }
    return "?";
}

std::size_t ValidationReport::count(ValidationStatus s) const {
    std::size_t k = 0;
    for (const auto& e : entries) k += e.status == s;
    return k;
}

const ValidationEntry* ValidationReport::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.formula_id == id) return &e;
    return nullptr;
}

ValidationReport validate(std::uint64_t seed, std::size_t points) {
    if (points == 0) throw Error(ErrorKind::invalid_input, "validate needs at least one point");
    ValidationReport r;
    r.seed = seed;
    r.points = points;
    Sampler s(seed);
    r.entries.push_back(check_igusa_j(s, points));
    r.entries.push_back(check_geometric_quadratic(s, points));
    r.entries.push_back(check_phi_st(2));
    r.entries.push_back(check_phi_st(3));
    for (auto& e : check_split2(s, points)) r.entries.push_back(std::move(e));
    for (auto& e : check_split3(s, points)) r.entries.push_back(std::move(e));
    r.entries.push_back(check_si_uv(s, points));
    r.entries.push_back(check_lift());
    return r;
}

}  // namespace g2split
