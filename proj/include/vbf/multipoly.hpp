#pragma once

#include "vbf/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vbf {

// A polynomial's variable universe: an immutable, shared list of names.
// Two polynomials interoperate iff their contexts agree (same object or
// same name list).
using VarContext = std::shared_ptr<const std::vector<std::string>>;

VarContext make_context(std::vector<std::string> names);
VarContext x_context(int n);                 // x1..xn
VarContext y_context(int n);                 // y1..yn
VarContext with_s(const VarContext& ctx);    // ctx's names plus trailing "s"
// x1..xn, d1..dn, s: the commutative symbol algebra of the cotangent space.
VarContext symbol_context(int n);
bool same_context(const VarContext& a, const VarContext& b);

using Exponents = std::vector<int>;

// Sparse multivariate polynomial with exact rational coefficients.
// Terms map exponent vectors to nonzero coefficients; the zero polynomial
// is the empty map. All arithmetic is exact.
class MultiPoly {
public:
    explicit MultiPoly(VarContext ctx);  // the zero polynomial

    static MultiPoly constant(const VarContext& ctx, const Rational& value);
    static MultiPoly variable(const VarContext& ctx, int index);
    static MultiPoly monomial(const VarContext& ctx, Exponents exps, const Rational& coeff);

    const VarContext& context() const { return ctx_; }
    int nvars() const { return static_cast<int>(ctx_->size()); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // coefficient of the constant term
    Rational coeff(const Exponents& exps) const;
    int total_degree() const;         // -1 for the zero polynomial
    int degree_in(int var) const;     // -1 for the zero polynomial
    bool is_homogeneous() const;      // zero counts as homogeneous

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    bool operator==(const MultiPoly& o) const;

    MultiPoly pow(int k) const;
    MultiPoly derivative(int var) const;  // formal partial derivative

    // Simultaneous substitution variable index -> polynomial (in the same
    // context); unmentioned variables stay themselves.
    MultiPoly substitute(const std::map<int, MultiPoly>& replacements) const;

    // Reinterpret in a larger context; var_map[i] is the index in `target`
    // of this polynomial's i-th variable (names must match).
    MultiPoly lifted(const VarContext& target, const std::vector<int>& var_map) const;

    // Graded-lexicographic order, highest total degree first; coefficients
    // as reduced fractions, e.g. "x1^2*x2 - 1/2*x2 + 3".
    std::string str() const;

private:
    void add_term(const Exponents& exps, const Rational& coeff);
    static void require_same_context(const MultiPoly& a, const MultiPoly& b);

    VarContext ctx_;
    std::map<Exponents, Rational> terms_;
};

// Rectangular grid of polynomials sharing one context.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, VarContext ctx);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const VarContext& context() const { return ctx_; }
    MultiPoly& at(int r, int c);
    const MultiPoly& at(int r, int c) const;

    PolyMatrix operator*(const PolyMatrix& o) const;

private:
    int rows_, cols_;
    VarContext ctx_;
    std::vector<MultiPoly> entries_;
};

}  // namespace vbf
