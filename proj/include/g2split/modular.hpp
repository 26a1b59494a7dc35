// Classical modular polynomials phi_N, their (s, t) = (x + y, xy) forms, and
// elimination of the parameters of a j-sum/j-product family.
#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2split/bipoly.hpp"
#include "g2split/exactmath.hpp"

namespace g2split {

struct ModularPolynomial {
    int N = 0;
    BiPoly<Integer> xy{Integer(0)};
    BiPoly<Integer> st{Integer(0)};
};

bool is_supported_level(int N);
// phi_N for N in {2, 3, 5, 7}. N = 2, 3 come from the printed displays, N = 5,
// 7 from the bundled data files (hash-checked). Throws integrity on a
// corrupt data file, unsupported for other N.
const ModularPolynomial& phi(int N);

// The displayed (x, y) and (s, t) forms for N = 2, 3.
BiPoly<Integer> printed_phi_xy(int N);
BiPoly<Integer> printed_phi_st(int N);

// Parses "PHI N=<n> terms=<k> sha256=<hex>" followed by "i j c [S]" lines;
// verifies the term count and digest.
BiPoly<Integer> parse_phi_data(std::string_view text, int expected_N);
std::string_view bundled_phi_data(int N);

// phi_N(x, y) = (x^N - y)(x - y^N) mod N.
bool kronecker_congruence_holds(const BiPoly<Integer>& xy, int N);

template <class F>
F eval_phi(const ModularPolynomial& m, const F& j1, const F& j2) {
    return m.xy.eval_in(j1, j2);
}

template <class F>
bool are_isogenous(const F& j1, const F& j2, int N) {
    return is_zero(eval_phi(phi(N), j1, j2));
}

// s or t as a ratio of polynomials in the two parameters.
struct RationalParam {
    BiPoly<Rational> num{Rational(0)};
    BiPoly<Rational> den{Rational(0)};
};

struct EliminationOptions {
    // Bound on the total degree of the cleared numerator.
    int max_degree = 1200;
    // Denominator factors stripped (every power) after clearing; each must
    // have a constant leading coefficient in the second parameter. Monomial
    // factors are always stripped.
    std::vector<BiPoly<Rational>> strip_factors;
};

// Clears the denominators of phi_N(s, t), strips denominator factors and
// content, and returns the primitive integer polynomial (positive leading term).
BiPoly<Integer> eliminate_locus(const BiPoly<Integer>& phi_st, const RationalParam& s, const RationalParam& t,
                                const EliminationOptions& options = {});

// Sparse-polynomial text: header "LOCUS n=<n> N=<N> terms=<k> sha256=<hex>"
// and lines "i j c".
std::string serialize_locus(const BiPoly<Integer>& p, int n, int N);
BiPoly<Integer> parse_locus(std::string_view text, int n, int N);

// Memoizes eliminated loci keyed by (n, N); optionally persisted in a
// directory (files locus_n<n>_N<N>.txt). Safe to share between threads.
class LocusCache {
public:
    explicit LocusCache(std::optional<std::filesystem::path> dir = std::nullopt);
    // Directory from G2SPLIT_CACHE_DIR when set.
    static LocusCache from_environment();

    template <class Compute>
    BiPoly<Integer> get(int n, int N, Compute&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = mem_.find({n, N});
            if (it != mem_.end()) return it->second;
        }
        if (auto loaded = load(n, N)) return remember(n, N, *loaded);
        BiPoly<Integer> p = compute();
        store(n, N, p);
        return remember(n, N, p);
    }

    const std::optional<std::filesystem::path>& directory() const { return dir_; }

private:
    std::optional<BiPoly<Integer>> load(int n, int N) const;
    void store(int n, int N, const BiPoly<Integer>& p) const;
    BiPoly<Integer> remember(int n, int N, const BiPoly<Integer>& p);

    std::optional<std::filesystem::path> dir_;
    std::mutex mu_;
    std::map<std::pair<int, int>, BiPoly<Integer>> mem_;
};

// Process-wide cache configured from the environment.
LocusCache& shared_locus_cache();

}  // namespace g2split
