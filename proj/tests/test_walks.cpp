#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "pinnacle/error.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/text.hpp"
#include "pinnacle/walks.hpp"

namespace pinnacle {
namespace {

Count C(long long v) { return Count::exact(v); }

std::vector<std::int64_t> mask_values(std::int64_t n, std::uint64_t mask) {
    std::vector<std::int64_t> values;
    for (std::int64_t v = 1; v <= n; ++v)
        if (mask >> (v - 1) & 1) values.push_back(v);
    return values;
}

TEST(ModifiedDyck, EnumerationIsExactAndOrdered) {
    const auto k0 = enumerate_modified_dyck(0);
    ASSERT_EQ(k0.size(), 1u);
    EXPECT_EQ(k0[0].heights(), std::vector<int>({0}));

    const auto k1 = enumerate_modified_dyck(1);
    ASSERT_EQ(k1.size(), 2u);
    EXPECT_EQ(k1[0].heights(), std::vector<int>({0, -1}));
    EXPECT_EQ(k1[1].heights(), std::vector<int>({0, 1}));

    const auto k2 = enumerate_modified_dyck(2);
    ASSERT_EQ(k2.size(), 2u);
    EXPECT_EQ(k2[0].heights(), std::vector<int>({0, 1, 0}));
    EXPECT_EQ(k2[1].heights(), std::vector<int>({0, 1, 2}));
}

TEST(ModifiedDyck, ValidatesTheProfile) {
    EXPECT_NO_THROW(ModifiedDyckWalk({0, 1, 0, -1}));
    EXPECT_THROW(ModifiedDyckWalk({0, -1, 0}), Error);  // dips before the end
    EXPECT_THROW(ModifiedDyckWalk({1, 2}), Error);      // starts off the origin
    EXPECT_THROW(ModifiedDyckWalk({0, 2}), Error);      // non-unit step
    EXPECT_THROW(ModifiedDyckWalk({}), Error);
}

TEST(DecoratedWalk, ValidatesStepsAgainstTheCandidate) {
    const PinnacleCandidate cand({3}, 3);
    // Step numbers run n..1 left to right; member steps are slanted.
    EXPECT_NO_THROW(DecoratedMotzkinWalk(
        {{StepKind::up, 1, Side::right}, {StepKind::flat, 1, Side::left}, {StepKind::flat, 2, Side::right}},
        cand));
    // A member step may not be flat.
    EXPECT_THROW(DecoratedMotzkinWalk(
        {{StepKind::flat, 1, Side::right}, {StepKind::flat, 1, Side::left}, {StepKind::flat, 1, Side::right}},
        cand), Error);
    // Down steps carry left sides, up steps right sides.
    EXPECT_THROW(DecoratedMotzkinWalk(
        {{StepKind::up, 1, Side::left}, {StepKind::flat, 1, Side::left}, {StepKind::flat, 1, Side::right}},
        cand), Error);
    // Labels live in [1, h+1].
    EXPECT_THROW(DecoratedMotzkinWalk(
        {{StepKind::up, 2, Side::right}, {StepKind::flat, 1, Side::left}, {StepKind::flat, 1, Side::right}},
        cand), Error);
    EXPECT_THROW(DecoratedMotzkinWalk(
        {{StepKind::up, 0, Side::right}, {StepKind::flat, 1, Side::left}, {StepKind::flat, 1, Side::right}},
        cand), Error);
    // Only the final step may end at -1.
    EXPECT_THROW(DecoratedMotzkinWalk(
        {{StepKind::down, 1, Side::left}, {StepKind::flat, 1, Side::left}, {StepKind::flat, 1, Side::right}},
        PinnacleCandidate({3}, 3)), Error);
}

TEST(DecoratedWalk, InfersTheCandidateFromSlants) {
    const auto walk = text::parse_walk("U1R F1L D2L F1R U1R F2L D2L F1L F1R");
    EXPECT_EQ(walk.n(), 9);
    const auto vals = walk.candidate().values();
    EXPECT_EQ(std::vector<std::int64_t>(vals.begin(), vals.end()),
              std::vector<std::int64_t>({3, 5, 7, 9}));
    EXPECT_EQ(walk.height_profile(),
              std::vector<int>({0, 1, 1, 0, 0, 1, 1, 0, 0, 0}));
}

TEST(MarkedCycle, EnforcesTheMarkingRules) {
    const PinnacleCandidate empty2({}, 2);
    // Valid: 2 sits in a decreasing window and is marked right; 1 is a free vale.
    EXPECT_NO_THROW(text::parse_marked_cycle("[3r,2r,1r]", empty2));
    EXPECT_NO_THROW(text::parse_marked_cycle("[3r,2r,1l]", empty2));
    // Valid: 2 sits in an increasing window and must be marked left.
    EXPECT_NO_THROW(text::parse_marked_cycle("[3r,1r,2l]", empty2));
    EXPECT_THROW(text::parse_marked_cycle("[3r,1r,2r]", empty2), Error);
    EXPECT_THROW(text::parse_marked_cycle("[3r,2l,1r]", empty2), Error);
    // The sentinel is always marked right.
    EXPECT_THROW(text::parse_marked_cycle("[3l,2r,1r]", empty2), Error);
    // Members that are not cyclic vales are marked right.
    EXPECT_THROW(text::parse_marked_cycle("[4r,2l,1r,3l]", PinnacleCandidate({2}, 3)), Error);
    EXPECT_NO_THROW(text::parse_marked_cycle("[4r,2r,1r,3l]", PinnacleCandidate({2}, 3)));
    // A cycle pinnacle outside the candidate set is inconsistent.
    EXPECT_THROW(text::parse_marked_cycle("[4r,1r,3r,2l]", PinnacleCandidate({}, 3)), Error);
}

TEST(WeightedWalkSum, KnownValues) {
    EXPECT_EQ(weighted_walk_sum(PinnacleCandidate({3}, 3)), C(16));
    EXPECT_EQ(weighted_walk_sum(PinnacleCandidate({2}, 2)), C(4));
    for (std::int64_t n = 0; n <= 8; ++n)
        EXPECT_EQ(weighted_walk_sum(PinnacleCandidate({}, n)), C(1ll << n)) << "n=" << n;
}

TEST(WeightedWalkSum, RelaxedEnumerationChangesNothing) {
    for (std::int64_t n = 1; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            const PinnacleCandidate cand(mask_values(n, mask), n);
            EXPECT_EQ(weighted_walk_sum(cand), weighted_walk_sum_relaxed(cand)) << "n=" << n;
        }
    }
}

TEST(WeightedWalkSum, ModularAgreesWithExact) {
    const ArithMode m = ArithMode::modular(1000003);
    for (std::uint64_t mask = 0; mask < (1ull << 6); ++mask) {
        const PinnacleCandidate cand(mask_values(6, mask), 6);
        EXPECT_EQ(reduced(weighted_walk_sum(cand), m), weighted_walk_sum(cand, m));
    }
}

TEST(WeightedWalkSum, RefusesHugeSubsetEnumerations) {
    std::vector<std::int64_t> many;
    for (std::int64_t v = 2; v <= 52; v += 2) many.push_back(v);
    EXPECT_THROW(weighted_walk_sum(PinnacleCandidate(many, 60)), Error);
    EXPECT_THROW(weighted_sum_lhs(PinnacleCandidate(many, 60),
                                  [](const PinnacleCandidate&) { return Count::exact(0); }),
                 Error);
}

TEST(WeightedSumLhs, MatchesTheSingleSubsetCase) {
    const auto counter = [](const PinnacleCandidate& q) {
        return oracle::brute_pinnacle_count(q);
    };
    // Empty set: single subset, weight 2.
    EXPECT_EQ(weighted_sum_lhs(PinnacleCandidate({}, 4), counter), C(16));
    // n=3, P={3}: 2*4 + 4*2 = 16.
    EXPECT_EQ(weighted_sum_lhs(PinnacleCandidate({3}, 3), counter), C(16));
    EXPECT_EQ(weighted_sum_lhs(PinnacleCandidate({3, 5}, 5), counter),
              weighted_walk_sum(PinnacleCandidate({3, 5}, 5)));
}

TEST(BijectionF, PinnedImages) {
    EXPECT_EQ(text::format_marked_cycle(f_map(text::parse_walk("F1L"))), "[2r,1l]");
    EXPECT_EQ(text::format_marked_cycle(f_map(text::parse_walk("F1R F1R"))), "[3r,2r,1r]");
    EXPECT_EQ(text::format_marked_cycle(f_map(text::parse_walk("F1L F1R"))), "[3r,1r,2l]");
    EXPECT_EQ(text::format_marked_cycle(
                  f_map(text::parse_walk("U1R F1L D2L F1R U1R F2L D2L F1L F1R"))),
              "[10r,6r,1r,2l,5r,3l,4l,8l,9r,7l]");
}

TEST(BijectionG, PinnedPreimages) {
    const PinnacleCandidate empty1({}, 1);
    EXPECT_EQ(text::format_walk(g_map(text::parse_marked_cycle("[2r,1l]", empty1))), "F1L");
    EXPECT_EQ(text::format_walk(g_map(text::parse_marked_cycle(
                  "[10r,6r,1r,2l,5r,3l,4l,8l,9r,7l]", PinnacleCandidate({3, 5, 7, 9}, 9)))),
              "U1R F1L D2L F1R U1R F2L D2L F1L F1R");
}

TEST(Bijection, RoundTripsOnTheFullFamilies) {
    for (std::int64_t n = 1; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            const PinnacleCandidate cand(mask_values(n, mask), n);
            for (const auto& walk : oracle::enumerate_decorated_walks(cand)) {
                const auto marked = f_map(walk);
                EXPECT_EQ(marked.candidate(), cand);
                EXPECT_TRUE(g_map(marked) == walk);
            }
            for (const auto& cycle : oracle::enumerate_marked_cycles(cand))
                EXPECT_TRUE(f_map(g_map(cycle)) == cycle);
        }
    }
}

}  // namespace
}  // namespace pinnacle
