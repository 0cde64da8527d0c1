#include "vbf/factored_bpoly.hpp"

#include <stdexcept>

namespace vbf {

FactoredBPoly FactoredBPoly::from_root(const Rational& root, int mult) {
    if (mult <= 0) throw std::invalid_argument("root multiplicity must be positive");
    FactoredBPoly p;
    p.roots_[root] = mult;
    return p;
}

FactoredBPoly FactoredBPoly::from_roots(std::initializer_list<std::pair<Rational, int>> roots) {
    FactoredBPoly p;
    for (const auto& [root, mult] : roots) {
        if (mult <= 0) throw std::invalid_argument("root multiplicity must be positive");
        p.roots_[root] += mult;
    }
    return p;
}

int FactoredBPoly::degree() const {
    int d = 0;
    for (const auto& [root, mult] : roots_) d += mult;
    return d;
}

int FactoredBPoly::multiplicity(const Rational& root) const {
    auto it = roots_.find(root);
    return it == roots_.end() ? 0 : it->second;
}

FactoredBPoly& FactoredBPoly::operator*=(const FactoredBPoly& o) {
    for (const auto& [root, mult] : o.roots_) roots_[root] += mult;
    return *this;
}

std::string FactoredBPoly::str() const {
    if (roots_.empty()) return "1";
    std::string out;
    // reverse iteration of the ascending map = roots in decreasing order
    for (auto it = roots_.rbegin(); it != roots_.rend(); ++it) {
        if (!out.empty()) out += ' ';
        const Rational offset = -it->first;  // factor is (s + offset)
        if (offset.is_zero()) {
            out += 's';
        } else if (offset.sign() > 0) {
            out += "(s + " + offset.str() + ")";
        } else {
            out += "(s - " + (-offset).str() + ")";
        }
        if (it->second > 1) out += "^" + std::to_string(it->second);
    }
    return out;
}

nlohmann::json FactoredBPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = roots_.rbegin(); it != roots_.rend(); ++it) {
        arr.push_back({{"num", it->first.num_long()},
                       {"den", it->first.den_long()},
                       {"mult", it->second}});
    }
    return nlohmann::json{{"roots", arr}};
}

FactoredBPoly FactoredBPoly::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("roots") || !j["roots"].is_array())
        throw std::invalid_argument("factored polynomial JSON must be {\"roots\": [...]}");
    FactoredBPoly p;
    for (const auto& entry : j["roots"]) {
        if (!entry.contains("num") || !entry.contains("den") || !entry.contains("mult"))
            throw std::invalid_argument("root entry needs num/den/mult");
        const long num = entry["num"].get<long>();
        const long den = entry["den"].get<long>();
        const int mult = entry["mult"].get<int>();
        if (den <= 0) throw std::invalid_argument("root denominator must be positive");
        if (mult <= 0) throw std::invalid_argument("root multiplicity must be positive");
        Rational root(num, den);
        if (root.num() != num || root.den() != den)
            throw std::invalid_argument("root fraction must be reduced");
        if (p.roots_.count(root)) throw std::invalid_argument("duplicate root in JSON");
        p.roots_[root] = mult;
    }
    return p;
}

FactoredBPoly lcm(const std::vector<FactoredBPoly>& items) {
    std::map<Rational, int> merged;
    for (const auto& item : items)
        for (const auto& [root, mult] : item.roots())
            if (int& m = merged[root]; m < mult) m = mult;
    FactoredBPoly out;
    for (const auto& [root, mult] : merged) out *= FactoredBPoly::from_root(root, mult);
    return out;
}

bool divides(const FactoredBPoly& a, const FactoredBPoly& b) {
    for (const auto& [root, mult] : a.roots())
        if (b.multiplicity(root) < mult) return false;
    return true;
}

FactoredBPoly affine_substitute(const FactoredBPoly& a, const Rational& u, const Rational& v) {
    if (u.is_zero()) throw std::invalid_argument("affine substitution requires u != 0");
    FactoredBPoly out;
    for (const auto& [root, mult] : a.roots())
        out *= FactoredBPoly::from_root((root - v) / u, mult);
    return out;
}

bool is_symmetric_about(const FactoredBPoly& a, const Rational& center) {
    const Rational two_c = center + center;
    for (const auto& [root, mult] : a.roots())
        if (a.multiplicity(two_c - root) != mult) return false;
    return true;
}

std::optional<std::pair<Rational, Rational>> root_extrema(const FactoredBPoly& a) {
    if (a.is_one()) return std::nullopt;
    return std::make_pair(a.roots().rbegin()->first, a.roots().begin()->first);
}

}  // namespace vbf
