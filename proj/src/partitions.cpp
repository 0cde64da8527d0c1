#include "vbf/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vbf {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int IntegerPartition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string IntegerPartition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks, int n)
    : blocks_(std::move(blocks)), n_(n) {
    if (n < 0) throw std::invalid_argument("set partition of negative ground set");
    std::set<int> seen;
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("set partition block may not be empty");
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 1 || e > n) throw std::invalid_argument("set partition element out of range");
            if (!seen.insert(e).second) throw std::invalid_argument("set partition blocks overlap");
        }
    }
    if (static_cast<int>(seen.size()) != n)
        throw std::invalid_argument("set partition blocks must cover {1..n}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::string SetPartition::str() const {
    std::string out;
    for (const auto& block : blocks_) {
        out += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(block[i]);
        }
        out += '}';
    }
    return out.empty() ? "{}" : out;
}

void for_each_integer_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 0) throw std::invalid_argument("integer partitions need n >= 0");
    if (n == 0) {
        fn({});
        return;
    }
    std::vector<int> cur{n};
    while (true) {
        fn(cur);
        // rightmost part that can still shrink
        int k = static_cast<int>(cur.size()) - 1;
        while (k >= 0 && cur[k] == 1) --k;
        if (k < 0) break;
        int remainder = static_cast<int>(cur.size()) - 1 - k + 1;  // the 1s plus one unit
        cur[k] -= 1;
        cur.resize(k + 1);
        while (remainder > 0) {
            const int next = std::min(cur[k], remainder);
            cur.push_back(next);
            remainder -= next;
            k += 1;
        }
    }
}

std::vector<IntegerPartition> integer_partitions(int n) {
    std::vector<IntegerPartition> out;
    for_each_integer_partition(n, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

namespace {

// Restricted growth strings: labels[0] = 0, labels[i] <= 1 + max(previous).
template <typename Fn>
void walk_rgs(int n, std::vector<int>& labels, std::vector<int>& sizes, int i, Fn&& leaf) {
    if (i == n) {
        leaf(labels, sizes);
        return;
    }
    const int used = static_cast<int>(sizes.size());
    for (int label = 0; label <= used; ++label) {
        labels[i] = label;
        if (label == used)
            sizes.push_back(1);
        else
            sizes[label] += 1;
        walk_rgs(n, labels, sizes, i + 1, leaf);
        if (label == used)
            sizes.pop_back();
        else
            sizes[label] -= 1;
    }
}

}  // namespace

std::vector<SetPartition> set_partitions(int n) {
    if (n < 0) throw std::invalid_argument("set_partitions: n must be nonnegative");
    std::vector<SetPartition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> labels(n), sizes;
    walk_rgs(n, labels, sizes, 0, [&](const std::vector<int>& lab, const std::vector<int>& sz) {
        std::vector<std::vector<int>> blocks(sz.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) blocks[b].reserve(sz[b]);
        for (int i = 0; i < n; ++i) blocks[lab[i]].push_back(i + 1);
        out.emplace_back(std::move(blocks), n);
    });
    return out;
}

void for_each_set_partition_sizes(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 0) throw std::invalid_argument("set partition of negative ground set");
    if (n == 0) {
        fn({});
        return;
    }
    std::vector<int> labels(n), sizes;
    walk_rgs(n, labels, sizes, 0,
             [&](const std::vector<int>&, const std::vector<int>& sz) { fn(sz); });
}

SetPartition set_partition_of_point(const std::vector<Rational>& q) {
    if (q.empty()) throw std::invalid_argument("point classification needs a nonempty point");
    std::map<Rational, std::vector<int>> levels;
    for (std::size_t i = 0; i < q.size(); ++i) levels[q[i]].push_back(static_cast<int>(i) + 1);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(levels.size());
    for (auto& [value, indices] : levels) blocks.push_back(std::move(indices));
    return SetPartition(std::move(blocks), static_cast<int>(q.size()));
}

IntegerPartition shape(const SetPartition& p) {
    std::vector<int> sizes;
    sizes.reserve(p.blocks().size());
    for (const auto& block : p.blocks()) sizes.push_back(static_cast<int>(block.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return IntegerPartition(std::move(sizes));
}

}  // namespace vbf
