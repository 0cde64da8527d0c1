#include "vbf/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vbf {

VarContext make_context(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarContext x_context(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make_context(std::move(names));
}

VarContext y_context(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return make_context(std::move(names));
}

VarContext with_s(const VarContext& ctx) {
    std::vector<std::string> names = *ctx;
    names.push_back("s");
    return make_context(std::move(names));
}

VarContext symbol_context(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("d" + std::to_string(i));
    names.push_back("s");
    return make_context(std::move(names));
}

bool same_context(const VarContext& a, const VarContext& b) {
    return a == b || (a && b && *a == *b);
}

MultiPoly::MultiPoly(VarContext ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("polynomial needs a variable context");
}

MultiPoly MultiPoly::constant(const VarContext& ctx, const Rational& value) {
    MultiPoly p(ctx);
    if (!value.is_zero()) p.terms_.emplace(Exponents(ctx->size(), 0), value);
    return p;
}

MultiPoly MultiPoly::variable(const VarContext& ctx, int index) {
    if (index < 0 || index >= static_cast<int>(ctx->size()))
        throw std::out_of_range("variable index outside context");
    Exponents e(ctx->size(), 0);
    e[index] = 1;
    return monomial(ctx, std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(const VarContext& ctx, Exponents exps, const Rational& coeff) {
    if (exps.size() != ctx->size())
        throw std::invalid_argument("exponent vector length does not match context");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    MultiPoly p(ctx);
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](int e) { return e == 0; }));
}

Rational MultiPoly::constant_value() const { return coeff(Exponents(ctx_->size(), 0)); }

Rational MultiPoly::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [exps, c] : terms_)
        deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0));
    return deg;
}

int MultiPoly::degree_in(int var) const {
    if (var < 0 || var >= nvars()) throw std::out_of_range("variable index outside context");
    int deg = -1;
    for (const auto& [exps, c] : terms_) deg = std::max(deg, exps[var]);
    return deg;
}

bool MultiPoly::is_homogeneous() const {
    int deg = -1;
    for (const auto& [exps, c] : terms_) {
        const int d = std::accumulate(exps.begin(), exps.end(), 0);
        if (deg == -1)
            deg = d;
        else if (d != deg)
            return false;
    }
    return true;
}

void MultiPoly::require_same_context(const MultiPoly& a, const MultiPoly& b) {
    if (!same_context(a.ctx_, b.ctx_))
        throw std::invalid_argument("polynomial variable contexts do not match");
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(ctx_);
    for (const auto& [exps, c] : terms_) out.terms_.emplace(exps, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_context(*this, o);
    if (this == &o) return *this *= Rational(2);
    for (const auto& [exps, c] : o.terms_) add_term(exps, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_context(*this, o);
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [exps, c] : o.terms_) add_term(exps, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    require_same_context(*this, o);
    MultiPoly out(ctx_);
    Exponents sum(ctx_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
            out.add_term(sum, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_) coeff *= c;
    return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    MultiPoly out = constant(ctx_, Rational(1));
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars()) throw std::out_of_range("variable index outside context");
    MultiPoly out(ctx_);
    for (const auto& [exps, c] : terms_) {
        if (exps[var] == 0) continue;
        Exponents e = exps;
        e[var] -= 1;
        out.add_term(e, c * Rational(exps[var]));
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<int, MultiPoly>& replacements) const {
    for (const auto& [var, poly] : replacements) {
        if (var < 0 || var >= nvars()) throw std::out_of_range("substituted variable outside context");
        require_same_context(*this, poly);
    }
    MultiPoly out(ctx_);
    std::map<std::pair<int, int>, MultiPoly> power_cache;
    for (const auto& [exps, c] : terms_) {
        Exponents kept = exps;
        MultiPoly factor = constant(ctx_, Rational(1));
        bool replaced_any = false;
        for (const auto& [var, poly] : replacements) {
            if (exps[var] == 0) continue;
            kept[var] = 0;
            replaced_any = true;
            auto key = std::make_pair(var, exps[var]);
            auto it = power_cache.find(key);
            if (it == power_cache.end())
                it = power_cache.emplace(key, poly.pow(exps[var])).first;
            factor *= it->second;
        }
        if (!replaced_any) {
            out.add_term(exps, c);
        } else {
            factor *= monomial(ctx_, std::move(kept), c);
            out += factor;
        }
    }
    return out;
}

MultiPoly MultiPoly::lifted(const VarContext& target, const std::vector<int>& var_map) const {
    if (var_map.size() != ctx_->size())
        throw std::invalid_argument("variable map length does not match context");
    for (std::size_t i = 0; i < var_map.size(); ++i) {
        const int t = var_map[i];
        if (t < 0 || t >= static_cast<int>(target->size()) || (*target)[t] != (*ctx_)[i])
            throw std::invalid_argument("variable map does not respect names");
    }
    MultiPoly out(target);
    for (const auto& [exps, c] : terms_) {
        Exponents e(target->size(), 0);
        for (std::size_t i = 0; i < var_map.size(); ++i) e[var_map[i]] = exps[i];
        out.terms_.emplace(std::move(e), c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [exps, c] : sorted) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += (*ctx_)[v];
            if (exps[v] > 1) mono += '^' + std::to_string(exps[v]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += mono;
        } else {
            out += mag.str() + '*' + mono;
        }
    }
    return out;
}

PolyMatrix::PolyMatrix(int rows, int cols, VarContext ctx) : rows_(rows), cols_(cols), ctx_(std::move(ctx)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    entries_.assign(static_cast<std::size_t>(rows) * cols, MultiPoly(ctx_));
}

MultiPoly& PolyMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

const MultiPoly& PolyMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    if (!same_context(ctx_, o.ctx_)) throw std::invalid_argument("matrix context mismatch");
    PolyMatrix out(rows_, o.cols_, ctx_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            MultiPoly sum(ctx_);
            for (int k = 0; k < cols_; ++k) sum += at(i, k) * o.at(k, j);
            out.at(i, j) = std::move(sum);
        }
    return out;
}

}  // namespace vbf
