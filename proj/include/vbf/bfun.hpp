#pragma once

#include "vbf/factored_bpoly.hpp"
#include "vbf/partitions.hpp"
#include "vbf/rational.hpp"

#include "json.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vbf {

// One row of the invariant suite: the conjectured b-function of the
// n-variable Vandermonde determinant together with the bound polynomials,
// the minimal jumping coefficient, and the outcome of every proved-property
// check run against them.
struct BFunctionReport {
    int n = 0;
    FactoredBPoly conjectured;
    FactoredBPoly blowup;
    FactoredBPoly upper_bound;
    Rational min_jump;
    std::map<std::string, bool> checks;

    bool all_ok() const;
    nlohmann::json to_json() const;
};

// Minimal jumping coefficient of the braid arrangement in n variables:
// brute force over all nontrivial set partitions P of {1..n} of
// (n - #blocks(P)) / sum_B C(|B|,2). Practical for 2 <= n <= 12.
Rational min_jumping_coefficient(int n);

// Evaluator for every b-function formula of the Vandermonde determinant.
// Holds the memo table for the recursion; all public methods are
// thread-safe (reads and inserts are serialized on one mutex).
class BFunctionEngine {
public:
    // Conjectured b-function of the n-variable Vandermonde determinant:
    //   b(n) = lcm_{lambda |- n, lambda != (n)} b(lambda)
    //          * prod_{i=n-1}^{(n-1)^2} (s + i/C(n,2)),
    // a plain product, so shared roots pick up multiplicity from both
    // blocks. b(0) = b(1) = 1.
    FactoredBPoly conjectured(int n);

    // Product of per-part conjectured b-functions.
    FactoredBPoly partition_b(const IntegerPartition& lambda);

    // Local b-function at the point q: partition_b of the coincidence
    // shape of q. A point with all coordinates distinct gives 1.
    FactoredBPoly local_b(const std::vector<Rational>& q);

    // b-function of the pullback under blowing up the small diagonal:
    //   lcm_{lambda != (n)} b(lambda) * prod_{i=1}^{C(n,2)} (s + i/C(n,2)).
    FactoredBPoly blowup_b(int n);

    // Upper bound for conjectured(n):
    //   lcm_{lambda != (n)} b(lambda) * the same lcm shifted by s -> s+1
    //   * prod_{i=n-1}^{(n-1)^2} (s + i/C(n,2)).
    FactoredBPoly upper_bound_b(int n);

    // Smallest (N, M) in lexicographic order, N <= maxN and M <= maxM, with
    //   conjectured(n) | prod_{k=0}^{N} lcm_{lambda != (n)} b(lambda)(s+k)
    //                    * prod_{i=1}^{M} (s + i/C(n,2));
    // nullopt when no pair within the bounds works.
    std::optional<std::pair<int, int>> kashiwara_cover(int n, int maxN, int maxM);

    BFunctionReport report_for(int n);

    // Reports for n = 2..n_max. Callers decide what to do with failures;
    // the CLI exits nonzero when any check is false.
    std::vector<BFunctionReport> run_invariant_suite(int n_max);

    // Memo import/export, used by the CLI's persistent cache.
    void seed(const std::map<int, FactoredBPoly>& entries);
    std::map<int, FactoredBPoly> snapshot() const;

private:
    FactoredBPoly conjectured_locked(int n);
    FactoredBPoly partition_lcm_locked(int n);  // lcm over lambda |- n, lambda != (n)

    mutable std::mutex mutex_;
    std::map<int, FactoredBPoly> memo_;
};

}  // namespace vbf
