#include "g2split/exactmath.hpp"

#include <algorithm>
#include <cctype>

namespace g2split {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::singular: return "singular";
        case ErrorKind::domain: return "domain";
        case ErrorKind::pole: return "pole";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::resource: return "resource";
        case ErrorKind::integrity: return "integrity";
        case ErrorKind::unsupported: return "unsupported";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::pole, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer parse_integer(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty() || s == "-") throw Error(ErrorKind::invalid_input, "empty integer literal");
    for (std::size_t i = (s[0] == '-') ? 1 : 0; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(ErrorKind::invalid_input, "malformed integer '" + std::string(text) + "'");
    }
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::invalid_input, "zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

bool is_square(const Rational& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational square_root(const Rational& q) {
    if (!is_square(q)) throw Error(ErrorKind::domain, to_string(q) + " is not a square in Q");
    Integer n = sqrt(q.get_num());
    Integer d = sqrt(q.get_den());
    return make_rational(n, d);
}

std::vector<Rational> cube_roots(const Rational& q) {
    Integer n, d;
    bool exact_n = mpz_root(n.get_mpz_t(), q.get_num_mpz_t(), 3) != 0;
    bool exact_d = mpz_root(d.get_mpz_t(), q.get_den_mpz_t(), 3) != 0;
    if (!exact_n || !exact_d) return {};
    return {make_rational(n, d)};
}

Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw Error(ErrorKind::pole, "division by zero");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// ---------------------------------------------------------------------------

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 62);

std::uint64_t reduce_signed(std::int64_t value, std::uint64_t p) {
    if (value >= 0) return static_cast<std::uint64_t>(value) % p;
    std::uint64_t m = static_cast<std::uint64_t>(-(value + 1)) % p;  // avoids INT64_MIN overflow
    return (p - 1 - m);
}

void same_field(std::uint64_t a, std::uint64_t b) {
    if (a != b) throw Error(ErrorKind::invalid_input, "mixed moduli in prime-field arithmetic");
}

}  // namespace

Fp::Fp(std::int64_t value, std::uint64_t p) : v_(0), p_(p) {
    if (p < 3 || p >= kMaxModulus) throw Error(ErrorKind::invalid_input, "modulus out of range");
    v_ = reduce_signed(value, p);
}

Fp Fp::from_integer(const Integer& n, std::uint64_t p) {
    Integer r = n % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    Fp a(0, p);
    a.v_ = r.get_ui();
    return a;
}

Fp Fp::from_rational(const Rational& q, std::uint64_t p) {
    Fp num = from_integer(q.get_num(), p);
    Fp den = from_integer(q.get_den(), p);
    if (den.is_zero())
        throw Error(ErrorKind::pole, "denominator of " + to_string(q) + " vanishes mod " + std::to_string(p));
    return num / den;
}

Fp Fp::operator+(const Fp& o) const {
    same_field(p_, o.p_);
    Fp r = *this;
    r.v_ = v_ + o.v_;
    if (r.v_ >= p_) r.v_ -= p_;
    return r;
}

Fp Fp::operator-(const Fp& o) const {
    same_field(p_, o.p_);
    Fp r = *this;
    r.v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
    return r;
}

Fp Fp::operator*(const Fp& o) const {
    same_field(p_, o.p_);
    Fp r = *this;
    r.v_ = static_cast<std::uint64_t>((static_cast<u128>(v_) * o.v_) % p_);
    return r;
}

Fp Fp::operator/(const Fp& o) const { return *this * o.inverse(); }

Fp Fp::operator-() const {
    Fp r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw Error(ErrorKind::pole, "inverse of zero in F_" + std::to_string(p_));
    // Extended Euclid on signed 128-bit values.
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = v_;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    Fp out = *this;
    out.v_ = static_cast<std::uint64_t>(t);
    return out;
}

Fp Fp::pow(std::uint64_t e) const {
    Fp result(1, p_);
    Fp b = *this;
    while (e) {
        if (e & 1u) result = result * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return result;
}

Fp Fp::pow(const Integer& e) const {
    if (e < 0) return inverse().pow(Integer(-e));
    Integer base(static_cast<unsigned long>(v_));
    Integer mod(static_cast<unsigned long>(p_));
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    Fp out(0, p_);
    out.v_ = r.get_ui();
    return out;
}

std::string to_string(const Fp& a) { return std::to_string(a.value()); }

bool is_probable_prime(std::uint64_t p) {
    Integer n(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

void require_odd_prime(std::uint64_t p) {
    if (p < 3 || p >= kMaxModulus || !is_probable_prime(p))
        throw Error(ErrorKind::invalid_input, std::to_string(p) + " is not an odd prime in range");
}

int legendre(const Fp& a) {
    if (a.is_zero()) return 0;
    Fp e = a.pow((a.modulus() - 1) / 2);
    return e.value() == 1 ? 1 : -1;
}

bool is_square(const Fp& a) { return legendre(a) >= 0; }

Fp square_root(const Fp& a) {
    const std::uint64_t p = a.modulus();
    if (a.is_zero()) return a;
    Fp euler = a.pow((p - 1) / 2);
    if (euler.value() != 1)
        throw Error(ErrorKind::domain, to_string(a) + " is not a square mod " + std::to_string(p) +
                                           " (a^((p-1)/2) = " + to_string(euler) + ")");
    if (p % 4 == 3) return a.pow((p + 1) / 4);
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1u) == 0) {
        q >>= 1u;
        ++s;
    }
    Fp z(2, p);
    while (legendre(z) != -1) z = z + Fp(1, p);
    Fp c = z.pow(q);
    Fp x = a.pow((q + 1) / 2);
    Fp t = a.pow(q);
    unsigned m = s;
    while (t.value() != 1) {
        unsigned i = 0;
        Fp t2 = t;
        while (t2.value() != 1) {
            t2 = t2 * t2;
            ++i;
        }
        Fp b = c;
        for (unsigned j = 0; j + 1 < m - i; ++j) b = b * b;
        x = x * b;
        c = b * b;
        t = t * c;
        m = i;
    }
    return x;
}

std::vector<Fp> cube_roots(const Fp& a) {
    const std::uint64_t p = a.modulus();
    if (a.is_zero()) return {a};
    if (p % 3 == 2) return {a.pow((2 * p - 1) / 3)};
    // p = 1 mod 3: a is a cube iff a^((p-1)/3) = 1; then three roots.
    if (a.pow((p - 1) / 3).value() != 1) return {};
    // Primitive cube root of unity w = g^((p-1)/3) for a non-cube g.
    Fp g(2, p);
    while (g.pow((p - 1) / 3).value() == 1) g = g + Fp(1, p);
    Fp w = g.pow((p - 1) / 3);
    // Adleman-Manders-Miller style search restricted to the 3-Sylow part.
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 3 == 0) {
        q /= 3;
        ++s;
    }
    Fp root;
    bool found = false;
    // x0 = a^k with 3k = 1 mod q (when q coprime to 3), corrected by 3-power roots of unity.
    Integer k = 1;
    if (q > 1) {
        Integer three = 3, qq(static_cast<unsigned long>(q));
        mpz_invert(k.get_mpz_t(), three.get_mpz_t(), qq.get_mpz_t());
    }
    Fp x0 = a.pow(k);
    Fp h = g.pow(q);  // generator of the 3-Sylow subgroup
    std::uint64_t order = 1;
    for (unsigned i = 0; i < s; ++i) order *= 3;
    if (order <= (std::uint64_t{1} << 24)) {
        Fp hj(1, p);
        for (std::uint64_t j = 0; j < order && !found; ++j) {
            Fp cand = x0 * hj;
            if (cand * cand * cand == a) {
                root = cand;
                found = true;
            }
            hj = hj * h;
        }
    }
    if (!found) throw Error(ErrorKind::resource, "cube root search exceeded budget");
    return {root, root * w, root * w * w};
}

// ---------------------------------------------------------------------------

Fp2::Fp2(Fp re, Fp im) : re_(re), im_(im) {
    if (re.modulus() != im.modulus()) throw Error(ErrorKind::invalid_input, "mixed moduli in F_p^2");
    if (re.modulus() % 4 != 3)
        throw Error(ErrorKind::invalid_input,
                    "F_p(i) requires p = 3 mod 4, got p = " + std::to_string(re.modulus()));
}

Fp2 Fp2::from_base(const Fp& re) { return Fp2(re, Fp(0, re.modulus())); }

Fp2 Fp2::operator*(const Fp2& o) const {
    return raw(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

Fp2 Fp2::inverse() const {
    Fp n = norm();
    if (n.is_zero()) throw Error(ErrorKind::pole, "inverse of zero in F_p^2");
    Fp ni = n.inverse();
    return raw(re_ * ni, -(im_ * ni));
}

Fp2 Fp2::pow(const Integer& e) const {
    if (e < 0) return inverse().pow(Integer(-e));
    Fp2 result = from_base(Fp(1, modulus()));
    Fp2 b = *this;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result * b;
        k >>= 1;
        if (k > 0) b = b * b;
    }
    return result;
}

std::string to_string(const Fp2& a) {
    if (a.im().is_zero()) return to_string(a.re());
    return to_string(a.re()) + "+" + to_string(a.im()) + "i";
}

bool is_square(const Fp2& a) { return is_square(a.norm()); }

Fp2 square_root(const Fp2& a) {
    const std::uint64_t p = a.modulus();
    if (a.is_zero()) return a;
    if (a.im().is_zero()) {
        if (is_square(a.re())) return Fp2::from_base(square_root(a.re()));
        return Fp2(Fp(0, p), square_root(-a.re()));  // (b i)^2 = -b^2
    }
    Fp n = a.norm();
    if (!is_square(n))
        throw Error(ErrorKind::domain, to_string(a) + " is not a square in F_p^2 (norm " + to_string(n) +
                                           " has Euler value " + to_string(n.pow((p - 1) / 2)) + ")");
    Fp r = square_root(n);
    Fp half = Fp(2, p).inverse();
    Fp t = (a.re() + r) * half;
    if (!is_square(t)) t = (a.re() - r) * half;
    Fp x = square_root(t);
    Fp y = a.im() / (x + x);
    Fp2 out(x, y);
    return out;
}

// ---------------------------------------------------------------------------

FieldSpec FieldSpec::parse(std::string_view text) {
    FieldSpec f;
    if (text == "Q" || text == "q" || text.empty()) return f;
    auto caret = text.find('^');
    Integer p = parse_integer(text.substr(0, caret));
    if (p <= 0 || !p.fits_ulong_p()) throw Error(ErrorKind::invalid_input, "bad field modulus");
    f.p = p.get_ui();
    require_odd_prime(f.p);
    if (caret == std::string_view::npos) {
        f.kind = Kind::prime;
    } else {
        if (text.substr(caret + 1) != "2") throw Error(ErrorKind::unsupported, "only p and p^2 fields");
        if (f.p % 4 != 3) throw Error(ErrorKind::invalid_input, "F_p^2 requires p = 3 mod 4");
        f.kind = Kind::prime_square;
    }
    return f;
}

std::string FieldSpec::label() const {
    switch (kind) {
        case Kind::rationals: return "Q";
        case Kind::prime: return std::to_string(p);
        case Kind::prime_square: return std::to_string(p) + "^2";
    }
    return "Q";
}

}  // namespace g2split
