#pragma once

#include "vbf/multipoly.hpp"

#include <vector>

namespace vbf {

// prod_{i<j in S} (x_i - x_j) over 0-based variable indices of ctx;
// empty or singleton S gives 1.
MultiPoly vandermonde(const VarContext& ctx, const std::vector<int>& indices);

// The full n-variable Vandermonde determinant on x_context(n).
MultiPoly vandermonde(int n);

// Scaled power sum (x_1^i + ... + x_n^i)/i over the first n context vars.
MultiPoly power_sum(const VarContext& ctx, int i, int n);

// k-th elementary symmetric polynomial in the given variables;
// k = 0 gives 1, k > |vars| gives 0.
MultiPoly elementary_symmetric(const VarContext& ctx, int k, const std::vector<int>& vars);

// Applies the gradient field of the i-th scaled power sum,
// sum_j x_j^{i-1} d/dx_j, to target (first n context vars).
MultiPoly apply_gradient_field(int i, int n, const MultiPoly& target);

// Cofactor of the Vandermonde determinant under the i-th gradient field:
//   sum_{i<j} sum_{a+b=k-2} x_i^a x_j^b,
// the division-free expansion of sum_{i<j} (x_i^{k-1}-x_j^{k-1})/(x_i-x_j).
MultiPoly gradient_cofactor(int k, int n);

// Checks apply_gradient_field(i, n, V) == gradient_cofactor(i, n) * V
// for all 1 <= i <= n, V the n-variable Vandermonde determinant.
bool verify_gradient_cofactors(int n);

// Unit lower-triangular elimination matrix with entries
//   m_{ij} = (-1)^{i+j} e_{i-j}(window_i)   (1-based i >= j)
// where window_i = {x_1..x_{i-1}} for start = 1 and {x_2..x_i} for start = 2.
PolyMatrix elimination_matrix(int n, int start = 1);

// The n x n matrix of power rows, entry (i, j) = x_j^{i-1}.
PolyMatrix power_matrix(int n);

// n x (n+1): power rows with the negated gradient cofactors appended as the
// last column.
PolyMatrix gamma_matrix(int n);

// Verifies that elimination_matrix(n) * power_matrix(n) is upper triangular
// with entry (i, j) = prod_{k<i} (x_j - x_k) for i <= j.
bool verify_triangular_form(int n);

// Last diagonal entry after eliminating the first-column-deleted gamma
// matrix with the start=2 window: -a_n - sum_{i<n} m_{ni} a_i where a_k is
// the k-th gradient cofactor.
MultiPoly last_elimination_pivot(int n);

// Image of p under x1 -> x2, x3..xn -> 0 (reduction modulo the ideal
// (x1-x2, x3, ..., xn)).
MultiPoly residue_mod_diagonal(const MultiPoly& p);

// Checks residue_mod_diagonal(last_elimination_pivot(n)) == -x2^{n-2}.
bool verify_last_pivot_residue(int n);

struct CofactorResidue {
    bool matches = false;
    MultiPoly actual;    // residue of the k-th gradient cofactor
    MultiPoly expected;  // (2n + k - 5) * x2^{k-2}
};

// Compares the diagonal residue of gradient_cofactor(k, n) against the
// closed form (2n + k - 5) x2^{k-2}. Holds for k >= 3; for k = 2 the left
// side is the constant C(n,2), so the caller gets the mismatch data.
CofactorResidue cofactor_residue(int k, int n);

}  // namespace vbf
