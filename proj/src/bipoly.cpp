#include "g2split/bipoly.hpp"

#include <cctype>

namespace g2split {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::string_view x, std::string_view y) : s_(text), x_(x), y_(y) {}

    BiPoly<Rational> parse() {
        auto r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    using P = BiPoly<Rational>;

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::invalid_input, "polynomial parse error at " + std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    P expr() {
        P acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }
    P term() {
        P acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                P d = factor();
                if (d.total_degree() != 0) fail("division by a non-constant");
                acc = acc.scale(Rational(1) / d.coeff(0, 0));
            } else {
                return acc;
            }
        }
    }
    P factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        P base = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }
    P primary() {
        skip();
        if (eat('(')) {
            P r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        std::size_t start = pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return P::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string_view name = s_.substr(start, pos_ - start);
        if (name == x_) return P::x(Rational(0));
        if (name == y_) return P::y(Rational(0));
        fail("unknown symbol '" + std::string(name) + "'");
    }

    std::string_view s_, x_, y_;
    std::size_t pos_ = 0;
};

}  // namespace

BiPoly<Rational> parse_bipoly(std::string_view text, std::string_view xname, std::string_view yname) {
    return Parser(text, xname, yname).parse();
}

BiPoly<Integer> to_integer_poly(const BiPoly<Rational>& p) {
    BiPoly<Integer> r{Integer(0)};
    for (const auto& [k, c] : p.terms()) {
        if (c.get_den() != 1) throw Error(ErrorKind::invalid_input, "polynomial has non-integral coefficients");
        r.add_term(k.first, k.second, c.get_num());
    }
    return r;
}

std::pair<BiPoly<Integer>, Rational> primitive_part(const BiPoly<Rational>& p) {
    if (p.is_zero()) return {BiPoly<Integer>(Integer(0)), Rational(0)};
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [k, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (sgn(p.terms().rbegin()->second) < 0) content = -content;
    return {to_integer_poly(p.scale(Rational(1) / content)), content};
}

}  // namespace g2split
