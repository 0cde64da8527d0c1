#pragma once

#include "vbf/factored_bpoly.hpp"
#include "vbf/multipoly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vbf {

struct WeylTermKey {
    Exponents xexp;
    Exponents dexp;
    auto operator<=>(const WeylTermKey&) const = default;
};

// Differential operator in normal-ordered form: a sum of terms
// c(s) * x^a * d^b with all polynomial parts to the left of the
// derivatives. s-coefficients are stored low degree first, no trailing
// zeros, and terms with equal (x, d) exponents are merged.
class WeylOperator {
public:
    explicit WeylOperator(VarContext xctx);

    const VarContext& context() const { return xctx_; }
    int nvars() const { return static_cast<int>(xctx_->size()); }
    const std::map<WeylTermKey, std::vector<Rational>>& terms() const { return terms_; }

    void add(const Exponents& xexp, const Exponents& dexp, int s_degree, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int order() const;  // max total derivative order; 0 for the zero operator

    std::string str() const;

private:
    VarContext xctx_;
    std::map<WeylTermKey, std::vector<Rational>> terms_;
};

struct PowerApplication {
    MultiPoly q;         // polynomial in the x variables and s
    int power_drop = 0;  // op applied to f^{s+1} equals q * f^{s+1-power_drop}
};

// Exact application of op to the symbolic power f^{s+1} via the chain rule;
// every term is brought to the common lowest power f^{s+1-order}.
PowerApplication apply_to_power(const WeylOperator& op, const MultiPoly& f);

struct OracleBounds {
    int order = 1;         // max total derivative order of the ansatz
    int s_degree = 1;      // max s-degree of operator coefficients
    int coeff_degree = 1;  // max total x-degree of operator coefficients
};

struct OracleResult {
    std::vector<Rational> b_coeffs;  // monic, index = power of s
    FactoredBPoly b_factored;        // product of the rational-root factors found
    bool fully_factored = false;     // true when b_factored accounts for all of b
    WeylOperator certificate;
    OracleBounds bounds;
};

// Bounded-ansatz search for a Bernstein identity L(s) f^{s+1} = b(s) f^s:
// unknowns are the coefficients of L (x-degree <= coeff_degree, derivative
// order <= order, s-degree <= s_degree) and of b; both sides are cleared to
// the common power f^{s+1-order} and coefficients matched, giving a
// homogeneous linear system solved exactly by fraction-free elimination.
// Among nullspace solutions with b != 0 one of minimal b-degree is returned,
// the minimality confirmed by re-solving with the degree capped one lower.
// nullopt when the ansatz admits no b != 0 (inconclusive, not a refutation).
//
// When f is homogeneous the ansatz is restricted to terms with
// |x-exponent| = |d-exponent| - deg f; the achievable set of b's is the same
// because the identity forces the other graded components to cancel.
// Pass graded_shortcut = false to search the full rectangle.
std::optional<OracleResult> find_bernstein(const MultiPoly& f, const OracleBounds& bounds,
                                           bool graded_shortcut = true);

// Splits off the rational-root factors of a monic polynomial (coefficients
// low degree first): returns the factored part and the remaining cofactor
// coefficients ({1} when the polynomial split completely).
std::pair<FactoredBPoly, std::vector<Rational>> extract_rational_roots(std::vector<Rational> coeffs);

// The n-variable Vandermonde determinant written in the difference
// coordinates y_i = x_i - x_{i+1}; a polynomial in n-1 variables.
MultiPoly vandermonde_essential(int n);

// Documented default bounds for verify_conjecture_small: (1,1,1) for n = 2,
// (4,4,3) for n = 3, (11,2,5) for n = 4 (the last is a pattern-based guess;
// the n = 4 search is far beyond interactive runtimes).
OracleBounds default_oracle_bounds(int n);

// True iff the oracle's b for the essential Vandermonde with the default
// bounds equals the conjectured b-function. n = 2 or 3 run in well under a
// second; n = 4 is permitted but takes a long time.
bool verify_conjecture_small(int n);

}  // namespace vbf
