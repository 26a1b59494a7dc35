// Montgomery curves E_alpha: y^2 = x (x - alpha)(x - 1/alpha) over F_{p^2},
// their genus-2 lift over F_p and the Weil-restriction check via L-polynomials.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2split/exactmath.hpp"
#include "g2split/genus2.hpp"
#include "g2split/poly.hpp"

namespace g2split {

// alpha = alpha0 + alpha1 i; p = 3 mod 4.
Fp2 make_alpha(std::uint64_t p, std::uint64_t alpha0, std::uint64_t alpha1);

// x (x - alpha)(x - 1/alpha); throws degenerate unless 0, alpha, 1/alpha are distinct.
UniPoly<Fp2> montgomery_cubic(const Fp2& alpha);

struct LiftedCurve {
    UniPoly<Fp> f1, f2, f3;
    UniPoly<Fp> sextic() const { return f1 * f2 * f3; }
};

// f1 = x^2 + k1 x - 1, f2 = x^2 - k1 x - 1, f3 = x^2 - k3 x - 1 with
// k1 = 2 a0 / a1 and k3 = 2 a0 (a0^2 + a1^2 - 1) / (a1 (a0^2 + a1^2 + 1)).
// Throws degenerate naming the vanishing quantity.
LiftedCurve lift_to_genus2(const Fp2& alpha);

struct SupersingularityReport {
    Integer count;   // #E(F_{p^2})
    Integer trace;   // p^2 + 1 - count
    bool supersingular = false;     // count = (p + 1)^2
    bool trace_divisible = false;   // trace = 0 mod p
};
SupersingularityReport is_supersingular(const UniPoly<Fp2>& cubic, std::uint64_t budget = kDefaultCountBudget);

struct RestrictionRow {
    std::uint64_t p = 0;
    std::uint64_t alpha0 = 0, alpha1 = 0;
    bool valid = false;
    std::string reason;  // why the row was skipped; empty when valid
    bool supersingular = false;
    bool lemma_holds = false;  // L_X(T) = L_E(T^2)
    std::optional<LPolynomial> lx;
    std::optional<LPolynomial> le;
};

RestrictionRow verify_restriction_isogeny(const Fp2& alpha, std::uint64_t budget = kDefaultCountBudget);

// Rows for alpha0 in [0, p), alpha1 in [1, p) in lexicographic order,
// at most `limit` of them. `workers` > 1 splits the work across threads.
std::vector<RestrictionRow> ss_scan(std::uint64_t p, std::optional<std::size_t> limit = std::nullopt,
                                    unsigned workers = 1);

std::string scan_csv_header();
std::string to_csv(const RestrictionRow& row);

// The two printed coordinate forms of the Weil restriction, with delta =
// delta0 + delta1 i supplied by the caller.
std::pair<Fp, Fp> weil_restriction_forms(const Fp2& alpha, const Fp2& delta, const Fp& x0, const Fp& x1,
                                         const Fp& y0, const Fp& y1);

}  // namespace g2split
