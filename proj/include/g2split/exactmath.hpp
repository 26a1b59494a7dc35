// Exact scalar arithmetic: integers and rationals (GMP), prime fields, and
// the quadratic extension F_p(i) with i^2 = -1.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace g2split {

enum class ErrorKind {
    invalid_input,
    singular,
    domain,
    pole,
    degenerate,
    resource,
    integrity,
    unsupported,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

const char* to_string(ErrorKind kind);

using Integer = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

Rational make_rational(const Integer& num, const Integer& den);
// Accepts "a", "-a", "a/b".
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

bool is_square(const Rational& q);
// Throws Error(domain) when q is not the square of a rational.
Rational square_root(const Rational& q);
// The rational cube root of q, if any (at most one).
std::vector<Rational> cube_roots(const Rational& q);

// ---------------------------------------------------------------------------
// Prime field F_p, p an odd prime below 2^62.
// ---------------------------------------------------------------------------

class Fp {
public:
    Fp() = default;
    Fp(std::int64_t value, std::uint64_t p);
    static Fp from_integer(const Integer& n, std::uint64_t p);
    static Fp from_rational(const Rational& q, std::uint64_t p);

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator/(const Fp& o) const;
    Fp operator-() const;
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }
    bool operator==(const Fp& o) const noexcept { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const noexcept { return !(*this == o); }

    Fp inverse() const;
    Fp pow(std::uint64_t e) const;
    Fp pow(const Integer& e) const;

private:
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

std::string to_string(const Fp& a);

// Checks that p is an odd prime that fits the representation.
void require_odd_prime(std::uint64_t p);
bool is_probable_prime(std::uint64_t p);

// Legendre symbol: 0, 1 or -1.
int legendre(const Fp& a);
bool is_square(const Fp& a);
// Tonelli-Shanks (a^((p+1)/4) when p = 3 mod 4). Throws Error(domain) on a
// nonsquare; the message carries the Euler-criterion witness.
Fp square_root(const Fp& a);
// All cube roots of a in F_p.
std::vector<Fp> cube_roots(const Fp& a);

// ---------------------------------------------------------------------------
// F_{p^2} = F_p(i), i^2 = -1, p = 3 mod 4.
// ---------------------------------------------------------------------------

class Fp2 {
public:
    Fp2() = default;
    Fp2(Fp re, Fp im);
    static Fp2 from_base(const Fp& re);

    const Fp& re() const noexcept { return re_; }
    const Fp& im() const noexcept { return im_; }
    std::uint64_t modulus() const noexcept { return re_.modulus(); }
    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool in_base_field() const noexcept { return im_.is_zero(); }

    Fp2 operator+(const Fp2& o) const { return raw(re_ + o.re_, im_ + o.im_); }
    Fp2 operator-(const Fp2& o) const { return raw(re_ - o.re_, im_ - o.im_); }
    Fp2 operator*(const Fp2& o) const;
    Fp2 operator/(const Fp2& o) const { return *this * o.inverse(); }
    Fp2 operator-() const { return raw(-re_, -im_); }
    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }
    Fp2& operator/=(const Fp2& o) { return *this = *this / o; }
    bool operator==(const Fp2& o) const noexcept { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Fp2& o) const noexcept { return !(*this == o); }

    Fp2 conj() const { return raw(re_, -im_); }
    Fp norm() const { return re_ * re_ + im_ * im_; }
    Fp2 inverse() const;
    Fp2 pow(const Integer& e) const;

private:
    static Fp2 raw(Fp re, Fp im) {
        Fp2 z;
        z.re_ = re;
        z.im_ = im;
        return z;
    }
    Fp re_;
    Fp im_;
};

std::string to_string(const Fp2& a);

bool is_square(const Fp2& a);
// Norm-then-lift square root.
Fp2 square_root(const Fp2& a);

// ---------------------------------------------------------------------------
// Uniform element construction for generic code. A "like" element carries
// the field (the modulus for F_p and F_{p^2}).
// ---------------------------------------------------------------------------

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int_like(const Rational&, long n) { return Rational(n); }
inline Rational convert_like(const Rational&, const Rational& q) { return q; }
inline Rational convert_like(const Rational&, const Integer& n) { return Rational(n); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

inline Integer zero_like(const Integer&) { return Integer(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline Integer from_int_like(const Integer&, long n) { return Integer(n); }
inline Integer convert_like(const Integer&, const Integer& n) { return n; }
inline bool is_zero(const Integer& n) { return sgn(n) == 0; }
Integer exact_div(const Integer& a, const Integer& b);

inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline Fp from_int_like(const Fp& a, long n) { return Fp(n, a.modulus()); }
inline Fp convert_like(const Fp& a, const Rational& q) { return Fp::from_rational(q, a.modulus()); }
inline Fp convert_like(const Fp& a, const Integer& n) { return Fp::from_integer(n, a.modulus()); }
inline Fp convert_like(const Fp&, const Fp& b) { return b; }
inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }

inline Fp2 zero_like(const Fp2& a) { return Fp2::from_base(Fp(0, a.modulus())); }
inline Fp2 one_like(const Fp2& a) { return Fp2::from_base(Fp(1, a.modulus())); }
inline Fp2 from_int_like(const Fp2& a, long n) { return Fp2::from_base(Fp(n, a.modulus())); }
inline Fp2 convert_like(const Fp2& a, const Rational& q) {
    return Fp2::from_base(Fp::from_rational(q, a.modulus()));
}
inline Fp2 convert_like(const Fp2& a, const Integer& n) {
    return Fp2::from_base(Fp::from_integer(n, a.modulus()));
}
inline Fp2 convert_like(const Fp2&, const Fp& b) { return Fp2::from_base(b); }
inline Fp2 convert_like(const Fp2&, const Fp2& b) { return b; }
inline bool is_zero(const Fp2& a) { return a.is_zero(); }
inline Fp2 exact_div(const Fp2& a, const Fp2& b) { return a / b; }

template <class F>
F power(const F& base, unsigned long e) {
    F result = one_like(base);
    F b = base;
    while (e) {
        if (e & 1u) result = result * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return result;
}

// Field description used by the CLI and by serialization.
struct FieldSpec {
    enum class Kind { rationals, prime, prime_square } kind = Kind::rationals;
    std::uint64_t p = 0;

    static FieldSpec parse(std::string_view text);  // "Q", "p", "p^2"
    std::string label() const;
};

}  // namespace g2split
