#pragma once

#include "vbf/rational.hpp"

#include "json.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vbf {

// Monic polynomial in one variable s represented by its multiset of rational
// roots: {root -> multiplicity}. The empty multiset is the constant 1.
//
// All the b-function formulas in this project are products of monic linear
// factors with rational roots, so lcm / divisibility / substitution reduce to
// exact multiset operations.
class FactoredBPoly {
public:
    FactoredBPoly() = default;  // the constant polynomial 1

    static FactoredBPoly one() { return {}; }
    // (s - root)^mult; mult must be positive.
    static FactoredBPoly from_root(const Rational& root, int mult = 1);
    static FactoredBPoly from_roots(std::initializer_list<std::pair<Rational, int>> roots);

    bool is_one() const { return roots_.empty(); }
    int degree() const;  // number of roots counted with multiplicity
    int multiplicity(const Rational& root) const;
    bool has_root(const Rational& root) const { return multiplicity(root) > 0; }
    const std::map<Rational, int>& roots() const { return roots_; }

    FactoredBPoly& operator*=(const FactoredBPoly& o);
    friend FactoredBPoly operator*(FactoredBPoly a, const FactoredBPoly& b) { return a *= b; }
    bool operator==(const FactoredBPoly&) const = default;

    // Canonical text form: factors sorted by root in decreasing order,
    // "(s + p/q)^m" with the exponent omitted when m = 1; "1" when empty.
    std::string str() const;

    // {"roots": [{"num": n, "den": d, "mult": m}, ...]}, roots sorted
    // decreasing, reduced fractions, den > 0.
    nlohmann::json to_json() const;
    static FactoredBPoly from_json(const nlohmann::json& j);

private:
    std::map<Rational, int> roots_;  // no zero multiplicities stored
};

// Per-root maximum of multiplicities; lcm of an empty list is 1.
FactoredBPoly lcm(const std::vector<FactoredBPoly>& items);

// True iff every root of a occurs in b with at least the same multiplicity.
bool divides(const FactoredBPoly& a, const FactoredBPoly& b);

// b(u*s + v) up to monic normalization: each root r maps to (r - v)/u.
// Throws std::invalid_argument when u = 0.
FactoredBPoly affine_substitute(const FactoredBPoly& a, const Rational& u, const Rational& v);

// True iff the root multiset is invariant under r -> 2c - r.
bool is_symmetric_about(const FactoredBPoly& a, const Rational& center);

// (max root, min root); nullopt for the constant 1.
std::optional<std::pair<Rational, Rational>> root_extrema(const FactoredBPoly& a);

}  // namespace vbf
