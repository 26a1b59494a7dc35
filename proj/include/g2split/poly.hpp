// Dense univariate polynomials over an exact coefficient domain.
//
// Coefficient types must provide +, -, *, ==, and the free functions
// zero_like / one_like / from_int_like / is_zero / exact_div. Fields are
// Rational, Fp and Fp2; UniPoly<Rational> itself is a valid coefficient
// domain for resultants of bivariate polynomials.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "g2split/exactmath.hpp"

namespace g2split {

template <class F>
class UniPoly;
template <class F>
bool is_zero(const UniPoly<F>& p);
template <class F>
UniPoly<F> exact_div(const UniPoly<F>& a, const UniPoly<F>& b);

template <class F>
class UniPoly {
public:
    // Zero polynomial over the field of `like`.
    explicit UniPoly(const F& like) : zero_(zero_like(like)) {}
    UniPoly(std::vector<F> coeffs, const F& like) : c_(std::move(coeffs)), zero_(zero_like(like)) {
        trim();
    }

    static UniPoly constant(const F& c) { return UniPoly(std::vector<F>{c}, c); }
    static UniPoly monomial(const F& c, int deg) {
        std::vector<F> v(static_cast<std::size_t>(deg) + 1, zero_like(c));
        v.back() = c;
        return UniPoly(std::move(v), c);
    }
    static UniPoly x(const F& like) { return monomial(one_like(like), 1); }
    // Monic (X - r).
    static UniPoly linear_root(const F& r) { return UniPoly(std::vector<F>{-r, one_like(r)}, r); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    const F& coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : zero_;
    }
    const F& lead() const { return c_.empty() ? zero_ : c_.back(); }
    const F& zero() const { return zero_; }
    F one() const { return one_like(zero_); }

    F operator()(const F& x) const {
        F acc = zero_;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Evaluation at a point of an extension (e.g. F_p coefficients at an F_p^2 point).
    template <class G>
    G eval_in(const G& x) const {
        G acc = zero_like(x);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + convert_like(x, *it);
        return acc;
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return UniPoly(std::move(r), zero_);
    }
    UniPoly operator-(const UniPoly& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
        return UniPoly(std::move(r), zero_);
    }
    UniPoly operator-() const {
        std::vector<F> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(-a);
        return UniPoly(std::move(r), zero_);
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly(zero_);
        std::vector<F> r(c_.size() + o.c_.size() - 1, zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (is_zero_coeff(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return UniPoly(std::move(r), zero_);
    }
    UniPoly scale(const F& k) const {
        std::vector<F> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(a * k);
        return UniPoly(std::move(r), zero_);
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly pow(unsigned e) const {
        UniPoly result = constant(one());
        UniPoly b = *this;
        while (e) {
            if (e & 1u) result = result * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return result;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly(zero_);
        std::vector<F> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * from_int_like(zero_, static_cast<long>(i)));
        return UniPoly(std::move(r), zero_);
    }

    // f(g(x)).
    UniPoly compose(const UniPoly& g) const {
        UniPoly acc(zero_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
        return acc;
    }

    // Division with remainder; coefficient domain must be a field unless the
    // divisor is monic.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw Error(ErrorKind::pole, "polynomial division by zero");
        if (degree() < d.degree()) return {UniPoly(zero_), *this};
        std::vector<F> rem = c_;
        std::vector<F> quot(c_.size() - d.c_.size() + 1, zero_);
        const F& lc = d.lead();
        for (int i = degree() - d.degree(); i >= 0; --i) {
            F& top = rem[static_cast<std::size_t>(i + d.degree())];
            if (is_zero_coeff(top)) continue;
            F q = exact_div(top, lc);
            quot[static_cast<std::size_t>(i)] = q;
            for (int j = 0; j <= d.degree(); ++j) {
                auto k = static_cast<std::size_t>(i + j);
                rem[k] = rem[k] - q * d.c_[static_cast<std::size_t>(j)];
            }
        }
        rem.erase(rem.begin() + d.degree(), rem.end());
        return {UniPoly(std::move(quot), zero_), UniPoly(std::move(rem), zero_)};
    }
    UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

    UniPoly monic() const {
        if (is_zero()) return *this;
        F inv = exact_div(one(), lead());
        return scale(inv);
    }

    // Exact division; throws when the remainder is nonzero.
    UniPoly divexact(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw Error(ErrorKind::invalid_input, "polynomial division is not exact");
        return q;
    }

private:
    static bool is_zero_coeff(const F& a) { return g2split::is_zero(a); }
    void trim() {
        while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
    F zero_;
};

template <class F>
UniPoly<F> zero_like(const UniPoly<F>& p) {
    return UniPoly<F>(p.zero());
}
template <class F>
UniPoly<F> one_like(const UniPoly<F>& p) {
    return UniPoly<F>::constant(p.one());
}
template <class F>
UniPoly<F> from_int_like(const UniPoly<F>& p, long n) {
    return UniPoly<F>::constant(from_int_like(p.zero(), n));
}
template <class F>
bool is_zero(const UniPoly<F>& p) {
    return p.is_zero();
}
template <class F>
UniPoly<F> exact_div(const UniPoly<F>& a, const UniPoly<F>& b) {
    return a.divexact(b);
}

template <class F>
std::string to_string(const UniPoly<F>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const F& c = p.coeff(i);
        if (is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        std::string cs = to_string(c);
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += "(" + cs + ")*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// Monic gcd over a field.
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class F>
struct ExtGcd {
    UniPoly<F> g;  // monic
    UniPoly<F> s;  // s*a + t*b = g
    UniPoly<F> t;
};

template <class F>
ExtGcd<F> extended_gcd(const UniPoly<F>& a, const UniPoly<F>& b) {
    UniPoly<F> r0 = a, r1 = b;
    UniPoly<F> s0 = UniPoly<F>::constant(a.one()), s1(a.zero());
    UniPoly<F> t0(a.zero()), t1 = UniPoly<F>::constant(a.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<F> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly<F> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = exact_div(r0.one(), r0.lead());
    return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, fraction free.
template <class R>
UniPoly<R> pseudo_remainder(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (b.is_zero()) throw Error(ErrorKind::pole, "pseudo-remainder by zero");
    int db = b.degree();
    UniPoly<R> r = a;
    int e = a.degree() - db + 1;
    if (e <= 0) return a;
    const R& lc = b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        UniPoly<R> term = UniPoly<R>::monomial(r.lead(), r.degree() - db);
        r = r.scale(lc) - term * b;
        --e;
    }
    if (e > 0) r = r.scale(power(lc, static_cast<unsigned long>(e)));
    return r;
}

// Resultant by the subresultant polynomial remainder sequence. Works over any
// integral domain with exact division (fields, Z, Q[y]).
template <class R>
R resultant(const UniPoly<R>& f, const UniPoly<R>& g) {
    const R zero = f.zero();
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::invalid_input, "resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return zero;
    UniPoly<R> a = f, b = g;
    R s = one_like(zero);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    }
    if (b.degree() == 0) return s * power(b.lead(), static_cast<unsigned long>(a.degree()));
    R gg = one_like(zero), h = one_like(zero);
    for (;;) {
        int delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
        UniPoly<R> r = pseudo_remainder(a, b);
        if (r.is_zero()) return zero;
        a = b;
        R denom = gg * power(h, static_cast<unsigned long>(delta));
        std::vector<R> coeffs;
        coeffs.reserve(r.coeffs().size());
        for (const auto& c : r.coeffs()) coeffs.push_back(exact_div(c, denom));
        b = UniPoly<R>(std::move(coeffs), zero);
        gg = a.lead();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gg;
        } else {
            h = exact_div(power(gg, static_cast<unsigned long>(delta)),
                          power(h, static_cast<unsigned long>(delta - 1)));
        }
        if (b.degree() == 0) break;
    }
    int da = a.degree();
    R last = b.lead();
    if (da == 0) return s * h;
    R num = power(last, static_cast<unsigned long>(da));
    R hh = (da == 1) ? num : exact_div(num, power(h, static_cast<unsigned long>(da - 1)));
    return s * hh;
}

// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f).
template <class F>
F discriminant(const UniPoly<F>& f) {
    if (f.degree() < 1) throw Error(ErrorKind::invalid_input, "discriminant of a constant polynomial");
    int n = f.degree();
    F r = resultant(f, f.derivative());
    F d = exact_div(r, f.lead());
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

// Sylvester-matrix determinant by fraction-free elimination; independent
// cross-check for the subresultant routine.
template <class R>
R sylvester_resultant(const UniPoly<R>& f, const UniPoly<R>& g) {
    const R zero = f.zero();
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::invalid_input, "resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return zero;
    int m = f.degree(), n = g.degree();
    int size = m + n;
    if (size == 0) return one_like(zero);
    std::vector<std::vector<R>> M(static_cast<std::size_t>(size), std::vector<R>(static_cast<std::size_t>(size), zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = g.coeff(n - j);
    // Bareiss.
    R sign = one_like(zero);
    R prev = one_like(zero);
    for (int k = 0; k < size - 1; ++k) {
        if (is_zero(M[k][k])) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i)
                if (!is_zero(M[i][k])) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return zero;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            M[i][k] = zero;
        }
        prev = M[k][k];
    }
    return sign * M[size - 1][size - 1];
}

// Roots in the coefficient field by exhaustive search (finite fields only,
// desk scale) are provided by callers; here: rational roots of a polynomial
// over Q via the rational root theorem are not needed.

// Rational functions num/den over a field, kept with monic denominator and
// reduced by gcd.
template <class F>
class RatFunc {
public:
    explicit RatFunc(const UniPoly<F>& num) : num_(num), den_(UniPoly<F>::constant(num.one())) {}
    RatFunc(const UniPoly<F>& num, const UniPoly<F>& den) : num_(num), den_(den) { normalize(); }

    const UniPoly<F>& num() const { return num_; }
    const UniPoly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    RatFunc operator-(const RatFunc& o) const { return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw Error(ErrorKind::pole, "rational function division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc scale(const F& k) const { return RatFunc(num_.scale(k), den_); }
    RatFunc pow(unsigned e) const { return RatFunc(num_.pow(e), den_.pow(e)); }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void normalize() {
        if (den_.is_zero()) throw Error(ErrorKind::pole, "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly<F>::constant(den_.one());
            return;
        }
        UniPoly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        F inv = exact_div(den_.one(), den_.lead());
        num_ = num_.scale(inv);
        den_ = den_.scale(inv);
    }

    UniPoly<F> num_;
    UniPoly<F> den_;
};

}  // namespace g2split
