#include "vbf/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace vbf {

namespace {

[[noreturn]] void unknown_type(std::string_view label) {
    throw std::invalid_argument("unknown Coxeter type: '" + std::string(label) + "'");
}

CoxeterDatum build(std::string label, int rank, std::vector<int> degrees, bool crystallographic) {
    std::sort(degrees.begin(), degrees.end());
    CoxeterDatum d;
    d.label = std::move(label);
    d.rank = rank;
    d.degrees = std::move(degrees);
    d.crystallographic = crystallographic;
    for (int deg : d.degrees) d.positive_root_count += deg - 1;
    if (static_cast<int>(d.degrees.size()) != rank)
        throw std::logic_error("degree table size mismatch for " + d.label);
    if (static_cast<long>(d.max_degree()) * rank != 2 * d.positive_root_count)
        throw std::logic_error("degree table fails d_max * rank = 2d for " + d.label);
    return d;
}

}  // namespace

CoxeterDatum coxeter_datum(std::string_view label) {
    if (label.size() < 2) unknown_type(label);
    const char family = label[0];
    std::string rest(label.substr(1));

    // I2(m) carries its parameter in parentheses.
    if (family == 'I') {
        if (rest.size() < 4 || rest[0] != '2' || rest[1] != '(' || rest.back() != ')')
            unknown_type(label);
        const std::string m_text = rest.substr(2, rest.size() - 3);
        if (m_text.empty() ||
            !std::all_of(m_text.begin(), m_text.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            unknown_type(label);
        const int m = std::stoi(m_text);
        if (m < 3) unknown_type(label);
        const bool cryst = m == 3 || m == 4 || m == 6;
        return build(std::string(label), 2, {2, m}, cryst);
    }

    if (!std::all_of(rest.begin(), rest.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        unknown_type(label);
    const int rank = std::stoi(rest);

    std::vector<int> degrees;
    switch (family) {
        case 'A':
            if (rank < 1) unknown_type(label);
            for (int d = 2; d <= rank + 1; ++d) degrees.push_back(d);
            return build(std::string(label), rank, std::move(degrees), true);
        case 'B':
        case 'C':
            if (rank < 2) unknown_type(label);
            for (int d = 2; d <= 2 * rank; d += 2) degrees.push_back(d);
            return build(std::string(label), rank, std::move(degrees), true);
        case 'D':
            if (rank < 4) unknown_type(label);
            for (int d = 2; d <= 2 * (rank - 1); d += 2) degrees.push_back(d);
            degrees.push_back(rank);
            return build(std::string(label), rank, std::move(degrees), true);
        case 'E':
            if (rank == 6) return build("E6", 6, {2, 5, 6, 8, 9, 12}, true);
            if (rank == 7) return build("E7", 7, {2, 6, 8, 10, 12, 14, 18}, true);
            if (rank == 8) return build("E8", 8, {2, 8, 12, 14, 18, 20, 24, 30}, true);
            unknown_type(label);
        case 'F':
            if (rank == 4) return build("F4", 4, {2, 6, 8, 12}, true);
            unknown_type(label);
        case 'G':
            if (rank == 2) return build("G2", 2, {2, 6}, true);
            unknown_type(label);
        case 'H':
            if (rank == 3) return build("H3", 3, {2, 6, 10}, false);
            if (rank == 4) return build("H4", 4, {2, 12, 20, 30}, false);
            unknown_type(label);
        default:
            unknown_type(label);
    }
}

std::vector<std::string> supported_type_labels() {
    std::vector<std::string> labels;
    for (int r = 1; r <= 12; ++r) labels.push_back("A" + std::to_string(r));
    for (int r = 2; r <= 12; ++r) labels.push_back("B" + std::to_string(r));
    for (int r = 4; r <= 12; ++r) labels.push_back("D" + std::to_string(r));
    labels.insert(labels.end(), {"E6", "E7", "E8", "F4", "G2", "H3", "H4"});
    for (int m = 3; m <= 12; ++m) labels.push_back("I2(" + std::to_string(m) + ")");
    return labels;
}

FactoredBPoly opdam_b(const CoxeterDatum& datum) {
    FactoredBPoly b;
    for (int d : datum.degrees)
        for (int j = 1; j <= d - 1; ++j)
            b *= FactoredBPoly::from_root(-(Rational(1, 2) + Rational(j, d)));
    return b;
}

bool nd_root_check(const FactoredBPoly& b, const CoxeterDatum& datum) {
    return b.has_root(Rational(-datum.rank, datum.positive_root_count));
}

bool budur_check(const FactoredBPoly& bg, const FactoredBPoly& bxi) {
    return divides(bg, affine_substitute(bxi, Rational(2), Rational(1)));
}

}  // namespace vbf
