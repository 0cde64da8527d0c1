#include "vbf/ratlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace vbf {

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

}  // namespace

NullspaceResult rational_nullspace(IntMatrix m) {
    const int rows = m.rows();
    const int cols = m.cols();
    NullspaceResult result;
    std::vector<int> pivot_row_of;  // parallel to pivot_columns

    mpz_class prev_pivot = 1;
    int next_row = 0;
    for (int col = 0; col < cols && next_row < rows; ++col) {
        // smallest-magnitude nonzero pivot keeps Bareiss growth down
        int pivot = -1;
        for (int r = next_row; r < rows; ++r) {
            if (m.at(r, col) == 0) continue;
            if (pivot < 0 || mpz_cmpabs(m.at(r, col).get_mpz_t(), m.at(pivot, col).get_mpz_t()) < 0)
                pivot = r;
        }
        if (pivot < 0) continue;  // free column
        swap_rows(m, next_row, pivot);
        const mpz_class& p = m.at(next_row, col);
        for (int r = next_row + 1; r < rows; ++r) {
            if (m.at(r, col) == 0) {
                // Bareiss still rescales rows that happen to have a zero entry
                for (int c = col + 1; c < cols; ++c) {
                    m.at(r, c) *= p;
                    mpz_divexact(m.at(r, c).get_mpz_t(), m.at(r, c).get_mpz_t(),
                                 prev_pivot.get_mpz_t());
                }
                continue;
            }
            for (int c = col + 1; c < cols; ++c) {
                m.at(r, c) = m.at(r, c) * p - m.at(r, col) * m.at(next_row, c);
                mpz_divexact(m.at(r, c).get_mpz_t(), m.at(r, c).get_mpz_t(),
                             prev_pivot.get_mpz_t());
            }
            m.at(r, col) = 0;
        }
        prev_pivot = p;
        result.pivot_columns.push_back(col);
        pivot_row_of.push_back(next_row);
        ++next_row;
    }
    result.rank = static_cast<int>(result.pivot_columns.size());

    // free columns span the nullspace; back-substitute each one
    std::vector<bool> is_pivot(cols, false);
    for (int c : result.pivot_columns) is_pivot[c] = true;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[fc] = Rational(1);
        for (int t = result.rank - 1; t >= 0; --t) {
            const int pr = pivot_row_of[t];
            const int pc = result.pivot_columns[t];
            Rational sum(0);
            for (int c = pc + 1; c < cols; ++c) {
                if (v[c].is_zero() || m.at(pr, c) == 0) continue;
                sum += Rational(mpq_class(m.at(pr, c))) * v[c];
            }
            v[pc] = -sum / Rational(mpq_class(m.at(pr, pc)));
        }
        result.basis.push_back(std::move(v));
    }
    return result;
}

NullspaceResult rational_nullspace(const std::vector<std::vector<Rational>>& rows, int cols) {
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw std::invalid_argument("ragged matrix row");
        mpz_class scale = 1;
        for (const Rational& x : rows[r]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.den().get_mpz_t());
        for (int c = 0; c < cols; ++c) {
            const Rational& x = rows[r][c];
            m.at(static_cast<int>(r), c) = x.num() * (scale / x.den());
        }
    }
    return rational_nullspace(std::move(m));
}

}  // namespace vbf
