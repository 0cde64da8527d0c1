#pragma once

#include "vbf/factored_bpoly.hpp"
#include "vbf/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace vbf {

// Reflection-group data for an irreducible finite Coxeter type: the rank,
// the degrees of the fundamental invariants, and the number of reflecting
// hyperplanes. Two consistency identities are asserted on construction:
//   sum(d_i - 1) = positive_root_count
//   d_max * rank = 2 * positive_root_count
struct CoxeterDatum {
    std::string label;        // "A3", "E8", "I2(7)", ...
    int rank = 0;
    std::vector<int> degrees; // ascending
    long positive_root_count = 0;
    bool crystallographic = false;

    int max_degree() const { return degrees.back(); }
};

// Parses labels like "A3", "B4", "D5", "E6", "F4", "G2", "H3", "H4", "I2(7)".
// Throws std::invalid_argument for unknown or out-of-range types.
CoxeterDatum coxeter_datum(std::string_view label);

// Finite sample of supported labels for exhaustive property suites:
// A1..A12, B2..B12, D4..D12, E6-E8, F4, G2, H3, H4, I2(3)..I2(12).
std::vector<std::string> supported_type_labels();

// b-function of the discriminant written in the invariants of the quotient:
//   prod_i prod_{j=1..d_i-1} (s + 1/2 + j/d_i).
FactoredBPoly opdam_b(const CoxeterDatum& datum);

// True iff -rank/positive_root_count is a root of b.
bool nd_root_check(const FactoredBPoly& b, const CoxeterDatum& datum);

// True iff bg(s) divides bxi(2s + 1).
bool budur_check(const FactoredBPoly& bg, const FactoredBPoly& bxi);

}  // namespace vbf
