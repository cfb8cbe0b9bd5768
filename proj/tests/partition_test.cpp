#include <gtest/gtest.h>

#include <random>
#include <set>

#include "corekit/beta_set.hpp"
#include "corekit/partition.hpp"
#include "corekit/sweeps.hpp"
#include "oracles.hpp"

using namespace corekit;

namespace {

const Partition kSample{8, 6, 5, 5, 3, 2, 2, 2, 1};
const Partition kKappa789{9, 9, 4, 4, 4, 4, 1, 1, 1, 1, 1, 1};

std::set<Int> as_set(const BetaSet& b) { return {b.beads().begin(), b.beads().end()}; }

} // namespace

TEST(Partition, RejectsBadParts) {
    EXPECT_THROW(Partition({1, 2}), InvalidArgument);
    EXPECT_THROW(Partition({3, -1}), InvalidArgument);
    EXPECT_THROW(Partition({3, 0, 1}), InvalidArgument);
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
    EXPECT_TRUE(Partition({0}).empty());
}

TEST(Partition, Size) {
    EXPECT_EQ(size(kSample), 34);
    EXPECT_EQ(size(Partition{}), 0);
    EXPECT_EQ(size(kKappa789), 40);
}

TEST(Exponential, ParsesExponentialSample) {
    EXPECT_EQ(parse_exponential("(8,6,5^2,3,2^3,1)"), kSample);
    EXPECT_EQ(parse_exponential("()"), Partition{});
    EXPECT_EQ(parse_exponential(" ( 4 , 2^1 ) "), Partition({4, 2}));
}

TEST(Exponential, FormatsRuns) {
    EXPECT_EQ(format_exponential(kKappa789), "(9^2,4^4,1^6)");
    EXPECT_EQ(format_exponential(kSample), "(8,6,5^2,3,2^3,1)");
    EXPECT_EQ(format_exponential(Partition{}), "()");
}

TEST(Exponential, ReportsErrorPositions) {
    auto position_of = [](const char* text) -> std::size_t {
        try {
            parse_exponential(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    EXPECT_EQ(position_of("(1,2)"), 3u);    // increasing
    EXPECT_EQ(position_of("(3,0)"), 3u);    // zero base
    EXPECT_EQ(position_of("(3,-1)"), 3u);   // negative base
    EXPECT_EQ(position_of("(3^0)"), 3u);    // zero exponent
    EXPECT_EQ(position_of("3,2"), 0u);      // missing paren
    EXPECT_EQ(position_of("(3,2"), 4u);     // unterminated
    EXPECT_EQ(position_of("(3,2)x"), 5u);   // trailing
    EXPECT_EQ(position_of("(3,,2)"), 3u);   // empty item
    EXPECT_EQ(position_of("(3^)"), 3u);     // missing exponent
}

TEST(FirstColumnHooks, MatchesBoxCounting) {
    EXPECT_EQ(as_set(first_column_hooks(Partition{2, 1})), (std::set<Int>{3, 1}));
    EXPECT_TRUE(first_column_hooks(Partition{}).empty());
    const std::set<Int> expected{16, 13, 11, 10, 7, 5, 4, 3, 1};
    EXPECT_EQ(oracle::first_column_hooks_by_counting(kSample), expected);
    EXPECT_EQ(as_set(first_column_hooks(kSample)), expected);
}

TEST(HookLength, Examples) {
    EXPECT_EQ(hook_length(Partition{2, 1}, {0, 0}), 3);
    EXPECT_EQ(hook_length(Partition{1}, {0, 0}), 1);
    EXPECT_EQ(hook_length(kSample, {0, 0}), 16);
    EXPECT_EQ(hook_length(kSample, {0, 0}), first_column_hooks(kSample).max());
}

TEST(HookLength, CellOutsideDiagram) {
    EXPECT_THROW(hook_length(Partition{2, 1}, {1, 1}), CellOutOfDiagram);
    EXPECT_THROW(hook_length(Partition{}, {0, 0}), CellOutOfDiagram);
    EXPECT_THROW(hook_length(Partition{2}, {-1, 0}), CellOutOfDiagram);
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(conjugate(Partition{3, 2, 1}), Partition({3, 2, 1}));
    EXPECT_EQ(conjugate(kKappa789), Partition({12, 6, 6, 6, 2, 2, 2, 2, 2}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
}

TEST(Contains, Examples) {
    EXPECT_TRUE(contains(Partition{3, 1, 1}, Partition{1}));
    EXPECT_FALSE(contains(Partition{1}, Partition{2}));
    EXPECT_FALSE(contains(Partition{2}, Partition{1, 1}));
}

TEST(Contains, MaximalThreeFourCoreHoldsAllOthers) {
    const auto cores = oracle::cores_by_filter({3, 4}, 5);
    ASSERT_EQ(cores.size(), 5u);
    for (const auto& c : cores) EXPECT_TRUE(contains(Partition{3, 1, 1}, c)) << c;
}

TEST(PartitionProperties, HooksAndConjugation) {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 500; ++n) {
        const Partition p = random_partition(rng, 80);
        const BetaSet hooks = first_column_hooks(p);
        ASSERT_EQ(hooks.count(), p.num_parts());
        if (!p.empty()) { EXPECT_EQ(hooks.max(), p.largest_part() + p.num_parts() - 1); }

        std::set<Int> first_column;
        for (Int i = 0; i < p.num_parts(); ++i) first_column.insert(hook_length(p, {i, 0}));
        EXPECT_EQ(first_column, as_set(hooks));

        EXPECT_EQ(size(conjugate(p)), size(p));
        EXPECT_EQ(conjugate(conjugate(p)), p);
        EXPECT_EQ(hooks.to_partition(), p);
    }
}

TEST(PartitionProperties, HookLengthAgreesWithGridCount) {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 200; ++n) {
        const Partition p = random_partition(rng, 60);
        const oracle::Grid g(p);
        for (const Cell& c : cells(p)) ASSERT_EQ(hook_length(p, c), g.hook(c.row, c.col));
    }
}

TEST(PartitionProperties, ContainmentIsAPartialOrder) {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 2000; ++n) {
        const Partition a = random_partition(rng, 12), b = random_partition(rng, 12), c = random_partition(rng, 12);
        EXPECT_TRUE(contains(a, a));
        if (contains(a, b) && contains(b, a)) { EXPECT_EQ(a, b); }
        if (contains(a, b) && contains(b, c)) { EXPECT_TRUE(contains(a, c)); }
    }
}

TEST(PartitionProperties, ExponentialRoundTrip) {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 1000; ++n) {
        const Partition p = random_partition(rng, 100);
        ASSERT_EQ(parse_exponential(format_exponential(p)), p);
    }
}

TEST(Staircase, SizesAreTriangular) {
    EXPECT_TRUE(staircase(0).empty());
    for (Int j = 0; j <= 30; ++j) EXPECT_EQ(size(staircase(j)), triangular(j));
    EXPECT_THROW(staircase(-1), InvalidArgument);
}
