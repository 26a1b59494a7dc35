#include "g2split/modular.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "g2split/hash.hpp"

namespace g2split {

namespace data {
extern const std::string_view phi2_txt;
extern const std::string_view phi3_txt;
extern const std::string_view phi5_txt;
extern const std::string_view phi7_txt;
}  // namespace data

namespace {

constexpr std::string_view kPhi2xy =
    "x^3 - x^2*y^2 + y^3 + 1488*x*y*(x + y) + 40773375*x*y - 162000*(x^2 + y^2)"
    " + 8748000000*(x + y) - 157464000000000";
constexpr std::string_view kPhi2st =
    "s^3 - 162000*s^2 + 1485*t*s - t^2 + 8748000000*s + 41097375*t - 157464000000000";
constexpr std::string_view kPhi3xy =
    "-x^3*y^3 + 2232*x^3*y^2 + 2232*y^3*x^2 + x^4 - 1069956*x^3*y + 2587918086*x^2*y^2"
    " - 1069956*y^3*x + y^4 + 36864000*x^3 + 8900222976000*x^2*y + 8900222976000*y^2*x"
    " + 36864000*y^3 + 452984832000000*x^2 - 770845966336000000*x*y + 452984832000000*y^2"
    " + 1855425871872000000000*x + 1855425871872000000000*y";
constexpr std::string_view kPhi3st =
    "s^4 + 36864000*s^3 - 1069960*s^2*t + 2232*s*t^2 - t^3 + 452984832000000*s^2"
    " + 8900112384000*t*s + 2590058000*t^2 + 1855425871872000000000*s - 771751936000000000*t";

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    while (!text.empty()) {
        auto nl = text.find('\n');
        out.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

std::map<std::string, std::string> header_fields(std::string_view header, std::string_view tag) {
    std::istringstream in{std::string(header)};
    std::string word;
    in >> word;
    if (word != tag) throw Error(ErrorKind::integrity, "data header does not start with " + std::string(tag));
    std::map<std::string, std::string> fields;
    while (in >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::integrity, "malformed data header field '" + word + "'");
        fields[word.substr(0, eq)] = word.substr(eq + 1);
    }
    return fields;
}

std::string_view body_after_header(std::string_view text) {
    auto nl = text.find('\n');
    return nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
}

// Parses "i j c [S]" lines into a polynomial.
BiPoly<Integer> parse_terms(std::string_view body, bool allow_symmetric) {
    BiPoly<Integer> p{Integer(0)};
    for (auto line : split_lines(body)) {
        std::istringstream in{std::string(line)};
        int i = -1, j = -1;
        std::string c, flag;
        if (!(in >> i >> j >> c) || i < 0 || j < 0) throw Error(ErrorKind::integrity, "malformed data line '" + std::string(line) + "'");
        in >> flag;
        Integer v;
        if (v.set_str(c, 10) != 0) throw Error(ErrorKind::integrity, "malformed coefficient '" + c + "'");
        p.add_term(i, j, v);
        if (flag == "S") {
            if (!allow_symmetric || i == j) throw Error(ErrorKind::integrity, "unexpected symmetry flag");
            p.add_term(j, i, v);
        } else if (!flag.empty()) {
            throw Error(ErrorKind::integrity, "unknown flag '" + flag + "'");
        }
    }
    return p;
}

void verify_digest(std::string_view body, const std::map<std::string, std::string>& fields) {
    auto it = fields.find("sha256");
    if (it == fields.end()) throw Error(ErrorKind::integrity, "data header lacks sha256");
    if (sha256_hex(body) != it->second) throw Error(ErrorKind::integrity, "data file hash mismatch");
}

ModularPolynomial build(int N) {
    ModularPolynomial m;
    m.N = N;
    BiPoly<Integer> bundled = parse_phi_data(bundled_phi_data(N), N);
    if (N == 2 || N == 3) {
        m.xy = printed_phi_xy(N);
        if (m.xy != bundled) throw Error(ErrorKind::integrity, "bundled phi_" + std::to_string(N) + " disagrees with the display");
    } else {
        m.xy = bundled;
    }
    m.st = xy_to_st(m.xy);
    return m;
}

BiPoly<Integer> integral_scaled(const BiPoly<Rational>& p, const Integer& scale) {
    BiPoly<Integer> r{Integer(0)};
    for (const auto& [k, c] : p.terms()) {
        Rational v = c * scale;
        if (v.get_den() != 1) throw Error(ErrorKind::invalid_input, "scaling did not clear denominators");
        r.add_term(k.first, k.second, v.get_num());
    }
    return r;
}

Integer denominator_lcm(const BiPoly<Rational>& a, const BiPoly<Rational>& b) {
    Integer l = 1;
    for (const auto* p : {&a, &b})
        for (const auto& [k, c] : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

std::vector<BiPoly<Integer>> powers(const BiPoly<Integer>& p, int n) {
    std::vector<BiPoly<Integer>> out{BiPoly<Integer>::constant(Integer(1))};
    for (int i = 1; i <= n; ++i) out.push_back(out.back() * p);
    return out;
}

BiPoly<Rational> to_rational(const BiPoly<Integer>& p) { return p.convert(Rational(0)); }

}  // namespace

bool is_supported_level(int N) { return N == 2 || N == 3 || N == 5 || N == 7; }

std::string_view bundled_phi_data(int N) {
    switch (N) {
        case 2: return data::phi2_txt;
        case 3: return data::phi3_txt;
        case 5: return data::phi5_txt;
        case 7: return data::phi7_txt;
        default: throw Error(ErrorKind::unsupported, "no modular polynomial bundled for N = " + std::to_string(N));
    }
}

BiPoly<Integer> parse_phi_data(std::string_view text, int expected_N) {
    auto lines = split_lines(text);
    if (lines.empty()) throw Error(ErrorKind::integrity, "empty modular polynomial data");
    auto fields = header_fields(lines.front(), "PHI");
    if (fields["N"] != std::to_string(expected_N)) throw Error(ErrorKind::integrity, "data file level mismatch");
    std::string_view body = body_after_header(text);
    verify_digest(body, fields);
    BiPoly<Integer> p = parse_terms(body, true);
    std::size_t stored = split_lines(body).size();
    if (fields["terms"] != std::to_string(stored)) throw Error(ErrorKind::integrity, "data file term count mismatch");
    return p;
}

BiPoly<Integer> printed_phi_xy(int N) {
    if (N == 2) return to_integer_poly(parse_bipoly(kPhi2xy, "x", "y"));
    if (N == 3) return to_integer_poly(parse_bipoly(kPhi3xy, "x", "y"));
    throw Error(ErrorKind::unsupported, "only phi_2 and phi_3 are displayed");
}

BiPoly<Integer> printed_phi_st(int N) {
    if (N == 2) return to_integer_poly(parse_bipoly(kPhi2st, "s", "t"));
    if (N == 3) return to_integer_poly(parse_bipoly(kPhi3st, "s", "t"));
    throw Error(ErrorKind::unsupported, "only phi_2 and phi_3 are displayed");
}

const ModularPolynomial& phi(int N) {
    static std::once_flag once;
    static std::array<ModularPolynomial, 4> table;
    if (!is_supported_level(N)) throw Error(ErrorKind::unsupported, "modular polynomial level " + std::to_string(N) + " is not in {2, 3, 5, 7}");
    std::call_once(once, [] {
        table[0] = build(2);
        table[1] = build(3);
        table[2] = build(5);
        table[3] = build(7);
    });
    switch (N) {
        case 2: return table[0];
        case 3: return table[1];
        case 5: return table[2];
        default: return table[3];
    }
}

bool kronecker_congruence_holds(const BiPoly<Integer>& xy, int N) {
    auto reduce = [N](const BiPoly<Integer>& p) {
        BiPoly<Integer> r{Integer(0)};
        for (const auto& [k, c] : p.terms()) {
            Integer m = c % N;
            if (m < 0) m += N;
            r.add_term(k.first, k.second, m);
        }
        return r;
    };
    Integer one = 1;
    auto a = BiPoly<Integer>::monomial(one, N, 0) - BiPoly<Integer>::y(one);
    auto b = BiPoly<Integer>::x(one) - BiPoly<Integer>::monomial(one, 0, N);
    return reduce(xy) == reduce(a * b);
}

BiPoly<Integer> eliminate_locus(const BiPoly<Integer>& phi_st, const RationalParam& s, const RationalParam& t,
                                const EliminationOptions& options) {
    if (s.den.is_zero() || t.den.is_zero()) throw Error(ErrorKind::pole, "zero denominator in elimination input");
    const int ds = phi_st.degree_x(), dt = phi_st.degree_y();
    auto sn = integral_scaled(s.num, denominator_lcm(s.num, s.den));
    auto sd = integral_scaled(s.den, denominator_lcm(s.num, s.den));
    auto tn = integral_scaled(t.num, denominator_lcm(t.num, t.den));
    auto td = integral_scaled(t.den, denominator_lcm(t.num, t.den));
    int estimate = ds * std::max(sn.total_degree(), sd.total_degree()) + dt * std::max(tn.total_degree(), td.total_degree());
    if (estimate > options.max_degree)
        throw Error(ErrorKind::resource, "elimination degree " + std::to_string(estimate) + " exceeds budget " +
                                             std::to_string(options.max_degree));
    auto snp = powers(sn, ds), sdp = powers(sd, ds), tnp = powers(tn, dt), tdp = powers(td, dt);
    BiPoly<Integer> acc{Integer(0)};
    for (int j = 0; j <= dt; ++j) {
        BiPoly<Integer> inner{Integer(0)};
        for (int i = 0; i <= ds; ++i) {
            Integer c = phi_st.coeff(i, j);
            if (c == 0) continue;
            inner += (snp[i] * sdp[ds - i]).scale(c);
        }
        if (inner.is_zero()) continue;
        acc += inner * tnp[j] * tdp[dt - j];
    }
    if (acc.is_zero()) throw Error(ErrorKind::degenerate, "phi_N vanishes identically on the family");
    auto [a, b] = acc.monomial_content();
    acc = acc.shift_down(a, b);
    if (!options.strip_factors.empty()) {
        BiPoly<Rational> q = to_rational(acc);
        for (const auto& f : options.strip_factors) {
            if (f.total_degree() <= 0) continue;
            for (;;) {
                auto [quot, exact] = divide_by(q, f);
                if (!exact) break;
                q = quot;
            }
        }
        return primitive_part(q).first;
    }
    return primitive_part(to_rational(acc)).first;
}

std::string serialize_locus(const BiPoly<Integer>& p, int n, int N) {
    std::string body;
    for (const auto& [k, c] : p.terms()) body += std::to_string(k.first) + " " + std::to_string(k.second) + " " + c.get_str() + "\n";
    return "LOCUS n=" + std::to_string(n) + " N=" + std::to_string(N) + " terms=" + std::to_string(p.size()) +
           " sha256=" + sha256_hex(body) + "\n" + body;
}

BiPoly<Integer> parse_locus(std::string_view text, int n, int N) {
    auto lines = split_lines(text);
    if (lines.empty()) throw Error(ErrorKind::integrity, "empty locus file");
    auto fields = header_fields(lines.front(), "LOCUS");
    if (fields["n"] != std::to_string(n) || fields["N"] != std::to_string(N))
        throw Error(ErrorKind::integrity, "locus file is for a different (n, N)");
    std::string_view body = body_after_header(text);
    verify_digest(body, fields);
    BiPoly<Integer> p = parse_terms(body, false);
    if (fields["terms"] != std::to_string(p.size())) throw Error(ErrorKind::integrity, "locus term count mismatch");
    return p;
}

LocusCache::LocusCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

LocusCache LocusCache::from_environment() {
    const char* env = std::getenv("G2SPLIT_CACHE_DIR");
    if (env == nullptr || *env == '\0') return LocusCache();
    return LocusCache(std::filesystem::path(env));
}

namespace {
std::filesystem::path locus_path(const std::filesystem::path& dir, int n, int N) {
    return dir / ("locus_n" + std::to_string(n) + "_N" + std::to_string(N) + ".txt");
}
}  // namespace

std::optional<BiPoly<Integer>> LocusCache::load(int n, int N) const {
    if (!dir_) return std::nullopt;
    auto path = locus_path(*dir_, n, N);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_locus(buf.str(), n, N);
}

void LocusCache::store(int n, int N, const BiPoly<Integer>& p) const {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    auto path = locus_path(*dir_, n, N);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::resource, "cannot write locus cache " + tmp.string());
        out << serialize_locus(p, n, N);
    }
    std::filesystem::rename(tmp, path);
}

BiPoly<Integer> LocusCache::remember(int n, int N, const BiPoly<Integer>& p) {
    std::lock_guard<std::mutex> lock(mu_);
    return mem_.emplace(std::make_pair(n, N), p).first->second;
}

LocusCache& shared_locus_cache() {
    static LocusCache cache = LocusCache::from_environment();
    return cache;
}

}  // namespace g2split
