// Sparse bivariate and multivariate polynomials.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "g2split/exactmath.hpp"
#include "g2split/poly.hpp"

namespace g2split {

namespace detail {
template <class R>
inline void add_product(R& acc, const R& a, const R& b) {
    acc = acc + a * b;
}
inline void add_product(Integer& acc, const Integer& a, const Integer& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
}  // namespace detail

// Sparse polynomial in (x, y); exponent pairs map to nonzero coefficients.
template <class R>
class BiPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, R>;

    explicit BiPoly(const R& like) : zero_(zero_like(like)) {}
    BiPoly(const Terms& terms, const R& like) : zero_(zero_like(like)) {
        for (const auto& [k, c] : terms) add_term(k.first, k.second, c);
    }

    static BiPoly constant(const R& c) {
        BiPoly p(c);
        p.add_term(0, 0, c);
        return p;
    }
    static BiPoly monomial(const R& c, int i, int j) {
        BiPoly p(c);
        p.add_term(i, j, c);
        return p;
    }
    static BiPoly x(const R& like) { return monomial(one_like(like), 1, 0); }
    static BiPoly y(const R& like) { return monomial(one_like(like), 0, 1); }

    const Terms& terms() const { return t_; }
    const R& zero() const { return zero_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }

    R coeff(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? zero_ : it->second;
    }
    void add_term(int i, int j, const R& c) {
        if (g2split::is_zero(c)) return;
        auto [it, inserted] = t_.emplace(Key{i, j}, c);
        if (!inserted) {
            it->second = it->second + c;
            if (g2split::is_zero(it->second)) t_.erase(it);
        }
    }

    int degree_x() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.first);
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.second);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
        return d;
    }

    BiPoly operator+(const BiPoly& o) const {
        BiPoly r = *this;
        for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
        return r;
    }
    BiPoly operator-(const BiPoly& o) const {
        BiPoly r = *this;
        for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, -c);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r(zero_);
        for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
        return r;
    }
    BiPoly scale(const R& k) const {
        BiPoly r(zero_);
        if (g2split::is_zero(k)) return r;
        for (const auto& [key, c] : t_) r.t_.emplace(key, c * k);
        return r;
    }
    // Multiplication through a dense grid.
    BiPoly operator*(const BiPoly& o) const {
        if (is_zero() || o.is_zero()) return BiPoly(zero_);
        int dx = degree_x() + o.degree_x() + 1;
        int dy = degree_y() + o.degree_y() + 1;
        std::vector<R> grid(static_cast<std::size_t>(dx) * static_cast<std::size_t>(dy), zero_);
        std::vector<std::pair<Key, const R*>> b;
        b.reserve(o.t_.size());
        for (const auto& [k, c] : o.t_) b.emplace_back(k, &c);
        for (const auto& [ka, ca] : t_)
            for (const auto& [kb, cb] : b) {
                auto idx = static_cast<std::size_t>(ka.first + kb.first) * static_cast<std::size_t>(dy) +
                           static_cast<std::size_t>(ka.second + kb.second);
                detail::add_product(grid[idx], ca, *cb);
            }
        BiPoly r(zero_);
        for (int i = 0; i < dx; ++i)
            for (int j = 0; j < dy; ++j) {
                const R& c = grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(dy) + static_cast<std::size_t>(j)];
                if (!g2split::is_zero(c)) r.t_.emplace(Key{i, j}, c);
            }
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    bool operator==(const BiPoly& o) const { return t_ == o.t_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly pow(unsigned e) const {
        BiPoly result = constant(one_like(zero_));
        BiPoly b = *this;
        while (e) {
            if (e & 1u) result = result * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return result;
    }

    // P(y, x).
    BiPoly swapped() const {
        BiPoly r(zero_);
        for (const auto& [k, c] : t_) r.t_.emplace(Key{k.second, k.first}, c);
        return r;
    }
    bool is_symmetric() const { return *this == swapped(); }

    // Exponent shift: divides by x^a y^b; throws if not exact.
    BiPoly shift_down(int a, int b) const {
        BiPoly r(zero_);
        for (const auto& [k, c] : t_) {
            if (k.first < a || k.second < b) throw Error(ErrorKind::invalid_input, "monomial division is not exact");
            r.t_.emplace(Key{k.first - a, k.second - b}, c);
        }
        return r;
    }
    // Largest (a, b) with x^a y^b dividing every term.
    std::pair<int, int> monomial_content() const {
        if (t_.empty()) return {0, 0};
        int a = t_.begin()->first.first, b = t_.begin()->first.second;
        for (const auto& [k, c] : t_) {
            a = std::min(a, k.first);
            b = std::min(b, k.second);
        }
        return {a, b};
    }

    R operator()(const R& xv, const R& yv) const { return eval_in(xv, yv); }

    // Evaluation at a point of any ring the coefficients convert into.
    template <class G>
    G eval_in(const G& xv, const G& yv) const {
        G acc = zero_like(xv);
        if (t_.empty()) return acc;
        int dx = degree_x(), dy = degree_y();
        std::vector<G> xp{one_like(xv)}, yp{one_like(xv)};
        for (int i = 1; i <= dx; ++i) xp.push_back(xp.back() * xv);
        for (int j = 1; j <= dy; ++j) yp.push_back(yp.back() * yv);
        for (const auto& [k, c] : t_) acc = acc + convert_like(xv, c) * xp[k.first] * yp[k.second];
        return acc;
    }

    // Univariate specializations.
    UniPoly<R> at_x(const R& xv) const {
        std::vector<R> c(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1, zero_);
        for (const auto& [k, v] : t_) c[k.second] = c[k.second] + v * power(xv, static_cast<unsigned long>(k.first));
        return UniPoly<R>(std::move(c), zero_);
    }
    UniPoly<R> at_y(const R& yv) const { return swapped().at_x(yv); }

    // Coefficient conversion (e.g. Integer -> Rational, Integer -> Fp).
    template <class G>
    BiPoly<G> convert(const G& like) const {
        BiPoly<G> r(like);
        for (const auto& [k, c] : t_) r.add_term(k.first, k.second, convert_like(like, c));
        return r;
    }

    // As a polynomial in y whose coefficients are polynomials in x.
    UniPoly<UniPoly<R>> as_poly_in_y() const {
        UniPoly<R> z(zero_);
        int dy = degree_y();
        std::vector<std::vector<R>> rows(static_cast<std::size_t>(std::max(dy, 0)) + 1);
        for (const auto& [k, c] : t_) {
            auto& row = rows[static_cast<std::size_t>(k.second)];
            if (row.size() <= static_cast<std::size_t>(k.first)) row.resize(static_cast<std::size_t>(k.first) + 1, zero_);
            row[static_cast<std::size_t>(k.first)] = c;
        }
        std::vector<UniPoly<R>> coeffs;
        for (auto& row : rows) coeffs.emplace_back(std::move(row), zero_);
        return UniPoly<UniPoly<R>>(std::move(coeffs), z);
    }
    static BiPoly from_poly_in_y(const UniPoly<UniPoly<R>>& p) {
        BiPoly r(p.zero().zero());
        for (int j = 0; j <= p.degree(); ++j) {
            const auto& cj = p.coeff(j);
            for (int i = 0; i <= cj.degree(); ++i) r.add_term(i, j, cj.coeff(i));
        }
        return r;
    }

private:
    Terms t_;
    R zero_;
};

template <class R>
std::string to_string(const BiPoly<R>& p, const std::string& xv = "x", const std::string& yv = "y") {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(it->second) + ")";
        if (it->first.first) out += "*" + xv + "^" + std::to_string(it->first.first);
        if (it->first.second) out += "*" + yv + "^" + std::to_string(it->first.second);
    }
    return out;
}

// Resultant with respect to y; the result is a polynomial in x over the
// field of coefficients.
template <class F>
UniPoly<F> resultant_y(const BiPoly<F>& p, const BiPoly<F>& q) {
    return resultant(p.as_poly_in_y(), q.as_poly_in_y());
}

// Substitutes s = x + y, t = xy into P(s, t).
template <class R>
BiPoly<R> st_to_xy(const BiPoly<R>& p) {
    const R& z = p.zero();
    BiPoly<R> s = BiPoly<R>::x(z) + BiPoly<R>::y(z);
    BiPoly<R> t = BiPoly<R>::monomial(one_like(z), 1, 1);
    int ds = p.degree_x(), dt = p.degree_y();
    std::vector<BiPoly<R>> sp{BiPoly<R>::constant(one_like(z))}, tp{BiPoly<R>::constant(one_like(z))};
    for (int i = 1; i <= ds; ++i) sp.push_back(sp.back() * s);
    for (int j = 1; j <= dt; ++j) tp.push_back(tp.back() * t);
    BiPoly<R> r(z);
    for (const auto& [k, c] : p.terms()) r += (sp[k.first] * tp[k.second]).scale(c);
    return r;
}

// Rewrites a symmetric P(x, y) in s = x + y, t = xy using
// x^a y^b + x^b y^a = t^b p_{a-b} and p_k = s p_{k-1} - t p_{k-2}.
template <class R>
BiPoly<R> xy_to_st(const BiPoly<R>& p) {
    if (!p.is_symmetric()) throw Error(ErrorKind::invalid_input, "symmetric reduction of a non-symmetric polynomial");
    const R& z = p.zero();
    int d = std::max(p.degree_x(), 0);
    BiPoly<R> s = BiPoly<R>::x(z), t = BiPoly<R>::y(z);
    std::vector<BiPoly<R>> pk{BiPoly<R>::constant(from_int_like(z, 2)), s};
    for (int k = 2; k <= d; ++k) pk.push_back(s * pk[k - 1] - t * pk[k - 2]);
    BiPoly<R> r(z);
    for (const auto& [k, c] : p.terms()) {
        int a = k.first, b = k.second;
        if (a < b) continue;
        BiPoly<R> tb = BiPoly<R>::monomial(one_like(z), 0, b);
        if (a == b)
            r += tb.scale(c);
        else
            r += (tb * pk[a - b]).scale(c);
    }
    return r;
}

// Exact division of a bivariate polynomial over a field by a divisor whose
// leading coefficient in y is a nonzero constant. Returns {quotient, exact}.
template <class F>
std::pair<BiPoly<F>, bool> divide_by(const BiPoly<F>& p, const BiPoly<F>& d) {
    auto P = p.as_poly_in_y();
    auto D = d.as_poly_in_y();
    if (D.lead().degree() != 0) throw Error(ErrorKind::unsupported, "divisor must have constant leading coefficient in y");
    auto [q, r] = P.divmod(D);
    return {BiPoly<F>::from_poly_in_y(q), r.is_zero()};
}

// Parses an expression in two named variables with integer literals,
// + - * ^, parentheses and division by constants, e.g. "4*v - u^2 + 110*u".
BiPoly<Rational> parse_bipoly(std::string_view text, std::string_view xname, std::string_view yname);
BiPoly<Integer> to_integer_poly(const BiPoly<Rational>& p);  // throws unless integral
// Primitive integer polynomial with positive leading term, and the scalar c
// with p = c * result.
std::pair<BiPoly<Integer>, Rational> primitive_part(const BiPoly<Rational>& p);

// Sparse polynomial in N variables.
template <class F, std::size_t N>
class MPoly {
public:
    using Exp = std::array<int, N>;
    using Terms = std::map<Exp, F>;

    explicit MPoly(const F& like) : zero_(zero_like(like)) {}

    static MPoly constant(const F& c) {
        MPoly p(c);
        p.add_term(Exp{}, c);
        return p;
    }
    static MPoly var(std::size_t i, const F& like) {
        MPoly p(like);
        Exp e{};
        e[i] = 1;
        p.add_term(e, one_like(like));
        return p;
    }

    const Terms& terms() const { return t_; }
    const F& zero() const { return zero_; }
    bool is_zero() const { return t_.empty(); }
    F coeff(const Exp& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? zero_ : it->second;
    }
    void add_term(const Exp& e, const F& c) {
        if (g2split::is_zero(c)) return;
        auto [it, inserted] = t_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (g2split::is_zero(it->second)) t_.erase(it);
        }
    }

    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, c] : o.t_) r.add_term(e, -c);
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        MPoly r(zero_);
        for (const auto& [ea, ca] : t_)
            for (const auto& [eb, cb] : o.t_) {
                Exp e;
                for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly scale(const F& k) const {
        MPoly r(zero_);
        for (const auto& [e, c] : t_) r.add_term(e, c * k);
        return r;
    }
    MPoly pow(unsigned e) const {
        MPoly r = constant(one_like(zero_));
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }
    bool operator==(const MPoly& o) const { return t_ == o.t_; }

    // Degrees of all monomials; {d} when homogeneous of degree d.
    std::vector<int> degrees() const {
        std::vector<int> out;
        for (const auto& [e, c] : t_) {
            int d = 0;
            for (int k : e) d += k;
            if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    bool is_homogeneous() const { return degrees().size() <= 1; }

    F operator()(const std::array<F, N>& pt) const {
        F acc = zero_;
        for (const auto& [e, c] : t_) {
            F m = c;
            for (std::size_t i = 0; i < N; ++i) m = m * power(pt[i], static_cast<unsigned long>(e[i]));
            acc = acc + m;
        }
        return acc;
    }

    // Substitutes every variable by a polynomial in the same ring.
    MPoly substitute(const std::array<MPoly, N>& images) const {
        MPoly r(zero_);
        for (const auto& [e, c] : t_) {
            MPoly m = constant(c);
            for (std::size_t i = 0; i < N; ++i)
                if (e[i]) m = m * images[i].pow(static_cast<unsigned>(e[i]));
            r = r + m;
        }
        return r;
    }

private:
    Terms t_;
    F zero_;
};

template <class F, std::size_t N>
std::string to_string(const MPoly<F, N>& p, const std::array<std::string, N>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(it->second) + ")";
        for (std::size_t i = 0; i < N; ++i) {
            if (it->first[i] == 0) continue;
            out += "*" + names[i];
            if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
        }
    }
    return out;
}

}  // namespace g2split
