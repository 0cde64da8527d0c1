#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vbf/partitions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

using namespace vbf;

TEST_CASE("integer partition counts match the partition numbers") {
    const std::vector<std::size_t> expected{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (std::size_t n = 0; n < expected.size(); ++n)
        CHECK(integer_partitions(static_cast<int>(n)).size() == expected[n]);
}

TEST_CASE("integer partitions come in reverse lexicographic order") {
    const auto p3 = integer_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == IntegerPartition({3}));
    CHECK(p3[1] == IntegerPartition({2, 1}));
    CHECK(p3[2] == IntegerPartition({1, 1, 1}));

    CHECK(integer_partitions(1) == std::vector<IntegerPartition>{IntegerPartition({1})});
    CHECK(integer_partitions(0) == std::vector<IntegerPartition>{IntegerPartition()});

    // each partition of n sums to n, is weakly decreasing, and appears once
    for (int n = 1; n <= 9; ++n) {
        const auto all = integer_partitions(n);
        std::set<std::vector<int>> seen;
        for (const auto& p : all) {
            CHECK(p.n() == n);
            CHECK(std::is_sorted(p.parts().rbegin(), p.parts().rend()));
            CHECK(seen.insert(p.parts()).second);
        }
    }
}

TEST_CASE("integer partition validation") {
    CHECK_THROWS_AS(IntegerPartition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(IntegerPartition({0}), std::invalid_argument);
    CHECK_THROWS_AS(IntegerPartition({3, -1}), std::invalid_argument);
    CHECK(IntegerPartition({3, 1, 1}).str() == "(3,1,1)");
}

TEST_CASE("set partition counts match the Bell numbers") {
    const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(set_partitions(static_cast<int>(n)).size() == bell[n]);
    // the larger sizes through the streaming enumerator
    for (std::size_t n = 9; n <= 10; ++n) {
        std::size_t count = 0;
        for_each_set_partition_sizes(static_cast<int>(n), [&](const std::vector<int>& sizes) {
            ++count;
            int total = 0;
            for (int s : sizes) total += s;
            CHECK(total == static_cast<int>(n));
        });
        CHECK(count == bell[n]);
    }
}

TEST_CASE("set partitions are canonical and exhaustive") {
    const auto parts = set_partitions(4);
    CHECK(parts.size() == 15);
    std::set<std::string> seen;
    for (const auto& p : parts) {
        CHECK(p.n() == 4);
        // canonical: blocks ordered by least element, each block ascending
        int last_front = 0;
        std::set<int> all;
        for (const auto& block : p.blocks()) {
            CHECK_FALSE(block.empty());
            CHECK(std::is_sorted(block.begin(), block.end()));
            CHECK(block.front() > last_front);
            last_front = block.front();
            for (int e : block) CHECK(all.insert(e).second);
        }
        CHECK(all == std::set<int>{1, 2, 3, 4});
        CHECK(seen.insert(p.str()).second);
    }

    CHECK(set_partitions(1).size() == 1);
    CHECK(set_partitions(1)[0].str() == "{1}");
}

TEST_CASE("set partition validation") {
    CHECK_THROWS_AS(SetPartition({{1, 2}}, 3), std::invalid_argument);          // misses 3
    CHECK_THROWS_AS(SetPartition({{1, 2}, {2, 3}}, 3), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(SetPartition({{1, 2}, {}}, 2), std::invalid_argument);      // empty block
    CHECK_THROWS_AS(SetPartition({{0, 1}}, 2), std::invalid_argument);          // out of range
    // canonicalization sorts blocks by least element
    const SetPartition p({{3}, {2, 1}}, 3);
    CHECK(p.str() == "{1,2}{3}");
}

TEST_CASE("point classification by exact equality") {
    const auto q1 = set_partition_of_point({Rational(5), Rational(5), Rational(7)});
    CHECK(q1.str() == "{1,2}{3}");

    const auto q2 = set_partition_of_point({Rational(0), Rational(0), Rational(0)});
    CHECK(q2.str() == "{1,2,3}");

    const auto q3 = set_partition_of_point({Rational(1), Rational(2), Rational(3)});
    CHECK(q3.str() == "{1}{2}{3}");

    // 1/2 and 2/4 are the same exact rational
    const auto q4 = set_partition_of_point({Rational(1, 2), Rational(2, 4), Rational(3)});
    CHECK(q4.str() == "{1,2}{3}");

    CHECK_THROWS_AS(set_partition_of_point({}), std::invalid_argument);
}

TEST_CASE("shape extraction") {
    CHECK(shape(SetPartition({{1, 2}, {3}}, 3)) == IntegerPartition({2, 1}));
    CHECK(shape(SetPartition({{1, 3}, {2, 4}}, 4)) == IntegerPartition({2, 2}));
    CHECK(shape(SetPartition({{1}, {2}, {3}}, 3)) == IntegerPartition({1, 1, 1}));
}

TEST_CASE("shape of a point is permutation invariant") {
    std::mt19937 rng(7041);
    std::uniform_int_distribution<int> value(0, 3), size(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> q;
        const int n = size(rng);
        for (int i = 0; i < n; ++i) q.emplace_back(value(rng), 1 + trial % 3);
        const IntegerPartition before = shape(set_partition_of_point(q));
        std::shuffle(q.begin(), q.end(), rng);
        CHECK(shape(set_partition_of_point(q)) == before);
    }
}
