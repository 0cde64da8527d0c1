#pragma once

#include "vbf/rational.hpp"

#include <gmpxx.h>

#include <vector>

namespace vbf {

// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const mpz_class& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

struct NullspaceResult {
    int rank = 0;
    std::vector<int> pivot_columns;               // ascending
    std::vector<std::vector<Rational>> basis;     // one vector per free column
};

// Exact nullspace over the rationals via fraction-free (Bareiss) Gaussian
// elimination. Deterministic: fixed column order, pivot row chosen as the
// smallest-magnitude nonzero candidate (ties to the lowest row index).
// The matrix is consumed.
NullspaceResult rational_nullspace(IntMatrix m);

// Convenience overload for rational input; each row is scaled by the lcm of
// its denominators first, which leaves the nullspace unchanged.
NullspaceResult rational_nullspace(const std::vector<std::vector<Rational>>& rows, int cols);

}  // namespace vbf
