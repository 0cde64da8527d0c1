#include "vbf/bfun.hpp"

#include "vbf/coxeter.hpp"

#include <stdexcept>

namespace vbf {

bool BFunctionReport::all_ok() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

nlohmann::json BFunctionReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["conjectured"] = conjectured.to_json();
    j["blowup"] = blowup.to_json();
    j["upper_bound"] = upper_bound.to_json();
    j["min_jump"] = {{"num", min_jump.num_long()}, {"den", min_jump.den_long()}};
    j["checks"] = checks;
    return j;
}

Rational min_jumping_coefficient(int n) {
    if (n < 2 || n > 12)
        throw std::invalid_argument("min_jumping_coefficient: n must be in [2, 12]");
    std::optional<Rational> best;
    for_each_set_partition_sizes(n, [&](const std::vector<int>& sizes) {
        long hyperplanes = 0;
        for (int size : sizes) hyperplanes += choose2(size);
        if (hyperplanes == 0) return;  // all singletons: not a flat of the arrangement
        const Rational ratio(n - static_cast<long>(sizes.size()), hyperplanes);
        if (!best || ratio < *best) best = ratio;
    });
    return *best;
}

FactoredBPoly BFunctionEngine::conjectured(int n) {
    if (n < 0) throw std::invalid_argument("conjectured b-function: n must be nonnegative");
    std::lock_guard<std::mutex> lock(mutex_);
    return conjectured_locked(n);
}

FactoredBPoly BFunctionEngine::conjectured_locked(int n) {
    if (n <= 1) return FactoredBPoly::one();
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    // fill bottom-up so the partition lcm only sees memoized entries
    for (int k = 2; k <= n; ++k) {
        if (memo_.count(k)) continue;
        FactoredBPoly b = partition_lcm_locked(k);
        const long pairs = choose2(k);
        for (long i = k - 1; i <= static_cast<long>(k - 1) * (k - 1); ++i)
            b *= FactoredBPoly::from_root(Rational(-i, pairs));
        memo_.emplace(k, std::move(b));
    }
    return memo_.at(n);
}

FactoredBPoly BFunctionEngine::partition_lcm_locked(int n) {
    FactoredBPoly acc;
    for_each_integer_partition(n, [&](const std::vector<int>& parts) {
        if (parts.size() == 1) return;  // lambda = (n)
        FactoredBPoly b;
        for (int part : parts) b *= conjectured_locked(part);
        acc = lcm({acc, b});
    });
    return acc;
}

FactoredBPoly BFunctionEngine::partition_b(const IntegerPartition& lambda) {
    std::lock_guard<std::mutex> lock(mutex_);
    FactoredBPoly b;
    for (int part : lambda.parts()) b *= conjectured_locked(part);
    return b;
}

FactoredBPoly BFunctionEngine::local_b(const std::vector<Rational>& q) {
    return partition_b(shape(set_partition_of_point(q)));
}

FactoredBPoly BFunctionEngine::blowup_b(int n) {
    if (n < 2) throw std::invalid_argument("blowup b-function needs n >= 2");
    std::lock_guard<std::mutex> lock(mutex_);
    conjectured_locked(n);  // warm the memo for the partition lcm
    FactoredBPoly b = partition_lcm_locked(n);
    const long pairs = choose2(n);
    for (long i = 1; i <= pairs; ++i) b *= FactoredBPoly::from_root(Rational(-i, pairs));
    return b;
}

FactoredBPoly BFunctionEngine::upper_bound_b(int n) {
    if (n < 2) throw std::invalid_argument("upper bound b-function needs n >= 2");
    std::lock_guard<std::mutex> lock(mutex_);
    conjectured_locked(n);
    const FactoredBPoly part_lcm = partition_lcm_locked(n);
    FactoredBPoly b = part_lcm;
    b *= affine_substitute(part_lcm, Rational(1), Rational(1));  // the s -> s+1 shift
    const long pairs = choose2(n);
    for (long i = n - 1; i <= static_cast<long>(n - 1) * (n - 1); ++i)
        b *= FactoredBPoly::from_root(Rational(-i, pairs));
    return b;
}

std::optional<std::pair<int, int>> BFunctionEngine::kashiwara_cover(int n, int maxN, int maxM) {
    if (n < 2) throw std::invalid_argument("kashiwara cover needs n >= 2");
    FactoredBPoly target, part_lcm;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        target = conjectured_locked(n);
        part_lcm = partition_lcm_locked(n);
    }
    const long pairs = choose2(n);
    FactoredBPoly shifted_lcms;  // prod_{k=0}^{N} part_lcm(s + k), grown incrementally
    for (int N = 0; N <= maxN; ++N) {
        shifted_lcms *= affine_substitute(part_lcm, Rational(1), Rational(N));
        FactoredBPoly cover = shifted_lcms;
        for (int M = 0; M <= maxM; ++M) {
            if (M > 0) cover *= FactoredBPoly::from_root(Rational(-M, pairs));
            if (divides(target, cover)) return std::make_pair(N, M);
        }
    }
    return std::nullopt;
}

BFunctionReport BFunctionEngine::report_for(int n) {
    if (n < 2) throw std::invalid_argument("invariant report needs n >= 2");
    BFunctionReport r;
    r.n = n;
    r.conjectured = conjectured(n);
    r.blowup = blowup_b(n);
    r.upper_bound = upper_bound_b(n);

    const long pairs = choose2(n);
    const Rational max_expected(-(n - 1), pairs);             // = -2/n
    const Rational min_expected(-static_cast<long>(n - 1) * (n - 1), pairs);
    // Bell growth caps the brute force; beyond it use the closed form.
    r.min_jump = n <= 12 ? min_jumping_coefficient(n) : Rational(n - 1, pairs);

    r.checks["symmetry"] = is_symmetric_about(r.conjectured, Rational(-1));

    const auto extrema = root_extrema(r.conjectured);
    r.checks["nd_root"] = extrema && extrema->first == max_expected;

    bool partitions_ok = true;
    for_each_integer_partition(n, [&](const std::vector<int>& parts) {
        FactoredBPoly b;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            for (int part : parts) b *= conjectured_locked(part);
        }
        partitions_ok = partitions_ok && divides(b, r.conjectured);
    });
    r.checks["partition_divisibility"] = partitions_ok;

    const CoxeterDatum a_type = coxeter_datum("A" + std::to_string(n - 1));
    r.checks["budur"] = budur_check(opdam_b(a_type), r.conjectured);

    bool interval_ok = extrema.has_value();
    if (extrema) {
        interval_ok = extrema->second >= min_expected && extrema->first <= max_expected &&
                      extrema->second > Rational(-2) && extrema->first < Rational(0);
    }
    r.checks["interval"] = interval_ok;

    r.checks["upper_bound_divisibility"] = divides(r.conjectured, r.upper_bound);
    r.checks["jumping_consistency"] = extrema && r.min_jump == -extrema->first;
    r.checks["kashiwara_cover"] = kashiwara_cover(n, 5, 200).has_value();
    return r;
}

std::vector<BFunctionReport> BFunctionEngine::run_invariant_suite(int n_max) {
    if (n_max < 2) throw std::invalid_argument("invariant suite needs n_max >= 2");
    std::vector<BFunctionReport> reports;
    reports.reserve(n_max - 1);
    for (int n = 2; n <= n_max; ++n) reports.push_back(report_for(n));
    return reports;
}

void BFunctionEngine::seed(const std::map<int, FactoredBPoly>& entries) {
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& [n, b] : entries)
        if (n >= 2) memo_.emplace(n, b);
}

std::map<int, FactoredBPoly> BFunctionEngine::snapshot() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_;
}

}  // namespace vbf
