#include "vbf/symfun.hpp"

#include "vbf/partitions.hpp"

#include <stdexcept>

namespace vbf {

MultiPoly vandermonde(const VarContext& ctx, const std::vector<int>& indices) {
    MultiPoly out = MultiPoly::constant(ctx, Rational(1));
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b)
            out *= MultiPoly::variable(ctx, indices[a]) - MultiPoly::variable(ctx, indices[b]);
    return out;
}

MultiPoly vandermonde(int n) {
    const VarContext ctx = x_context(n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return vandermonde(ctx, all);
}

MultiPoly power_sum(const VarContext& ctx, int i, int n) {
    if (i < 1) throw std::invalid_argument("power sum index must be >= 1");
    if (n > static_cast<int>(ctx->size())) throw std::invalid_argument("power sum over too many variables");
    MultiPoly out(ctx);
    for (int j = 0; j < n; ++j) {
        Exponents e(ctx->size(), 0);
        e[j] = i;
        out += MultiPoly::monomial(ctx, std::move(e), Rational(1, i));
    }
    return out;
}

MultiPoly elementary_symmetric(const VarContext& ctx, int k, const std::vector<int>& vars) {
    if (k < 0) throw std::invalid_argument("elementary symmetric index must be >= 0");
    // e[j] over a growing variable set: e[j] += x * e[j-1]
    std::vector<MultiPoly> e(k + 1, MultiPoly(ctx));
    e[0] = MultiPoly::constant(ctx, Rational(1));
    for (int v : vars) {
        const MultiPoly x = MultiPoly::variable(ctx, v);
        for (int j = std::min<int>(k, static_cast<int>(vars.size())); j >= 1; --j)
            e[j] += x * e[j - 1];
    }
    return e[k];
}

MultiPoly apply_gradient_field(int i, int n, const MultiPoly& target) {
    if (i < 1 || i > n) throw std::invalid_argument("gradient field index out of range");
    if (n > target.nvars()) throw std::invalid_argument("gradient field over too many variables");
    const VarContext& ctx = target.context();
    MultiPoly out(ctx);
    for (int j = 0; j < n; ++j) {
        Exponents e(ctx->size(), 0);
        e[j] = i - 1;
        out += MultiPoly::monomial(ctx, std::move(e), Rational(1)) * target.derivative(j);
    }
    return out;
}

MultiPoly gradient_cofactor(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("cofactor index out of range");
    const VarContext ctx = x_context(n);
    MultiPoly out(ctx);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int a = 0; a <= k - 2; ++a) {
                Exponents e(ctx->size(), 0);
                e[i] += a;
                e[j] += k - 2 - a;
                out += MultiPoly::monomial(ctx, std::move(e), Rational(1));
            }
    return out;
}

bool verify_gradient_cofactors(int n) {
    if (n < 2) throw std::invalid_argument("cofactor verification needs n >= 2");
    const MultiPoly v = vandermonde(n);
    for (int i = 1; i <= n; ++i)
        if (apply_gradient_field(i, n, v) != gradient_cofactor(i, n) * v) return false;
    return true;
}

PolyMatrix elimination_matrix(int n, int start) {
    if (n < 1) throw std::invalid_argument("elimination matrix needs n >= 1");
    if (start != 1 && start != 2) throw std::invalid_argument("window start must be 1 or 2");
    const VarContext ctx = x_context(n);
    PolyMatrix m(n, n, ctx);
    for (int i = 1; i <= n; ++i) {
        // window_i = {x_start, ..., x_{start+i-2}}, i-1 variables (0-based below)
        std::vector<int> window;
        for (int v = start - 1; v <= start + i - 3; ++v) window.push_back(v);
        for (int j = 1; j <= i; ++j) {
            MultiPoly entry = elementary_symmetric(ctx, i - j, window);
            if ((i + j) % 2 != 0) entry *= Rational(-1);
            m.at(i - 1, j - 1) = std::move(entry);
        }
    }
    return m;
}

PolyMatrix power_matrix(int n) {
    const VarContext ctx = x_context(n);
    PolyMatrix m(n, n, ctx);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Exponents e(ctx->size(), 0);
            e[j] = i;
            m.at(i, j) = MultiPoly::monomial(ctx, std::move(e), Rational(1));
        }
    return m;
}

PolyMatrix gamma_matrix(int n) {
    const VarContext ctx = x_context(n);
    PolyMatrix m(n, n + 1, ctx);
    const PolyMatrix powers = power_matrix(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = powers.at(i, j);
        m.at(i, n) = -gradient_cofactor(i + 1, n);
    }
    return m;
}

bool verify_triangular_form(int n) {
    if (n < 2) throw std::invalid_argument("triangular form verification needs n >= 2");
    const VarContext ctx = x_context(n);
    const PolyMatrix product = elimination_matrix(n, 1) * power_matrix(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            MultiPoly expected(ctx);
            if (i <= j) {
                expected = MultiPoly::constant(ctx, Rational(1));
                for (int k = 1; k < i; ++k)
                    expected *= MultiPoly::variable(ctx, j - 1) - MultiPoly::variable(ctx, k - 1);
            }
            if (!(product.at(i - 1, j - 1) == expected)) return false;
        }
    return true;
}

MultiPoly last_elimination_pivot(int n) {
    if (n < 2) throw std::invalid_argument("elimination pivot needs n >= 2");
    const PolyMatrix m = elimination_matrix(n, 2);
    MultiPoly out = -gradient_cofactor(n, n);
    for (int i = 1; i <= n - 1; ++i) out -= m.at(n - 1, i - 1) * gradient_cofactor(i, n);
    return out;
}

MultiPoly residue_mod_diagonal(const MultiPoly& p) {
    const int n = p.nvars();
    if (n < 2) throw std::invalid_argument("diagonal residue needs at least two variables");
    std::map<int, MultiPoly> repl;
    repl.emplace(0, MultiPoly::variable(p.context(), 1));  // x1 -> x2
    for (int v = 2; v < n; ++v) repl.emplace(v, MultiPoly(p.context()));
    return p.substitute(repl);
}

bool verify_last_pivot_residue(int n) {
    const VarContext ctx = x_context(n);
    Exponents e(ctx->size(), 0);
    e[1] = n - 2;
    const MultiPoly expected = MultiPoly::monomial(ctx, std::move(e), Rational(-1));
    return residue_mod_diagonal(last_elimination_pivot(n)) == expected;
}

CofactorResidue cofactor_residue(int k, int n) {
    if (k < 2 || k > n) throw std::invalid_argument("cofactor residue needs 2 <= k <= n");
    const VarContext ctx = x_context(n);
    Exponents e(ctx->size(), 0);
    e[1] = k - 2;
    CofactorResidue r{false, MultiPoly(ctx), MultiPoly(ctx)};
    r.actual = residue_mod_diagonal(gradient_cofactor(k, n));
    r.expected = MultiPoly::monomial(ctx, std::move(e), Rational(2 * n + k - 5));
    r.matches = r.actual == r.expected;
    return r;
}

}  // namespace vbf
