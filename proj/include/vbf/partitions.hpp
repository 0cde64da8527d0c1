#pragma once

#include "vbf/rational.hpp"

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace vbf {

// Number of unordered pairs from m items.
inline long choose2(long m) { return m * (m - 1) / 2; }

// Partition of an integer n into weakly decreasing positive parts.
class IntegerPartition {
public:
    IntegerPartition() = default;  // the empty partition of 0
    explicit IntegerPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const;
    std::string str() const;  // "(3,1,1)"

    bool operator==(const IntegerPartition&) const = default;
    auto operator<=>(const IntegerPartition&) const = default;

private:
    std::vector<int> parts_;
};

// Partition of {1..n} into nonempty disjoint blocks. Canonical form: each
// block sorted ascending, blocks ordered by smallest element.
class SetPartition {
public:
    SetPartition() = default;  // partition of the empty set
    SetPartition(std::vector<std::vector<int>> blocks, int n);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    std::string str() const;  // "{1,2}{3}"

    bool operator==(const SetPartition&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
    int n_ = 0;
};

// All partitions of n in reverse lexicographic order; n = 0 gives the single
// empty partition.
std::vector<IntegerPartition> integer_partitions(int n);

// Streaming variant: calls fn once per partition (as the raw weakly
// decreasing parts vector) in the same order, materializing nothing.
// Partition counts grow subexponentially but fast; this keeps memory flat
// for consumers that only fold over the partitions.
void for_each_integer_partition(int n, const std::function<void(const std::vector<int>&)>& fn);

// All Bell(n) set partitions of {1..n}, in restricted-growth-string order.
// Bell growth makes this practical only for n <= 12 or so.
std::vector<SetPartition> set_partitions(int n);

// Calls fn once per set partition of {1..n} with the multiset of block
// sizes (unsorted); avoids materializing the partitions.
void for_each_set_partition_sizes(int n, const std::function<void(const std::vector<int>&)>& fn);

// Blocks are the level sets of q under exact rational equality.
SetPartition set_partition_of_point(const std::vector<Rational>& q);

// Block sizes sorted weakly decreasing.
IntegerPartition shape(const SetPartition& p);

}  // namespace vbf
