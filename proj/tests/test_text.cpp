#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "pinnacle/error.hpp"
#include "pinnacle/text.hpp"

namespace pinnacle {
namespace {

TEST(Text, IntListRoundTrip) {
    EXPECT_EQ(text::parse_int_list("3,6,7"), std::vector<std::int64_t>({3, 6, 7}));
    EXPECT_EQ(text::parse_int_list(""), std::vector<std::int64_t>{});
    EXPECT_EQ(text::format_int_list(std::vector<std::int64_t>({3, 6, 7})), "3,6,7");
    EXPECT_EQ(text::format_int_list(std::vector<std::int64_t>{}), "");
    EXPECT_EQ(text::format_set(std::vector<std::int64_t>({3, 6, 7})), "{3,6,7}");
    EXPECT_EQ(text::format_set(std::vector<std::int64_t>{}), "{}");
    EXPECT_THROW(text::parse_int_list("3,,5"), Error);
    EXPECT_THROW(text::parse_int_list("3,x"), Error);
}

TEST(Text, PermutationRoundTrip) {
    const std::string body = "5,7,6,4,2,3,1,8";
    EXPECT_EQ(text::format_permutation(text::parse_permutation(body)), body);
    EXPECT_THROW(text::parse_permutation("1,1"), Error);
}

TEST(Text, CycleRotationIsCanonicalized) {
    EXPECT_EQ(text::format_cycle(text::parse_cycle("[1,2,5,3,4]")), "[5,3,4,1,2]");
    EXPECT_EQ(text::format_cycle(text::parse_cycle("[5,3,4,1,2]")), "[5,3,4,1,2]");
    EXPECT_EQ(text::format_cycle(text::parse_cycle("[1]")), "[1]");
    EXPECT_THROW(text::parse_cycle("1,2,3"), Error);
    EXPECT_THROW(text::parse_cycle("[]"), Error);
}

TEST(Text, MarkedCycleRoundTrip) {
    const PinnacleCandidate cand({3, 5, 7, 9}, 9);
    const std::string body = "[10r,6r,1r,2l,5r,3l,4l,8l,9r,7l]";
    EXPECT_EQ(text::format_marked_cycle(text::parse_marked_cycle(body, cand)), body);
    EXPECT_THROW(text::parse_marked_cycle("[3x,2r,1r]", PinnacleCandidate({}, 2)), Error);
    EXPECT_THROW(text::parse_marked_cycle("[3r,2r]", PinnacleCandidate({}, 2)), Error);
}

TEST(Text, WalkRoundTrip) {
    const std::string body = "U1R F1L D2L F1R U1R F2L D2L F1L F1R";
    EXPECT_EQ(text::format_walk(text::parse_walk(body)), body);
    EXPECT_EQ(text::format_walk(text::parse_walk("")), "");
    EXPECT_THROW(text::parse_walk("X1R"), Error);
    EXPECT_THROW(text::parse_walk("U1X"), Error);
    EXPECT_THROW(text::parse_walk("UR"), Error);
    EXPECT_THROW(text::parse_walk("U2R"), Error);  // label past the start height + 1
}

TEST(Text, BlockRoundTrip) {
    EXPECT_EQ(text::format_block(text::parse_block("0010011")), "0010011");
    EXPECT_THROW(text::parse_block(""), Error);
    EXPECT_THROW(text::parse_block("0120"), Error);
}

TEST(Text, ForestRoundTrip) {
    const std::string body = "1 ((2,3)4,5)6 7";
    EXPECT_EQ(text::format_forest(text::parse_forest(body)), body);
    EXPECT_EQ(text::format_forest(text::parse_forest("")), "");
    EXPECT_EQ(text::format_forest(text::parse_forest("  1   (2,3)4 ")), "1 (2,3)4");
    EXPECT_THROW(text::parse_forest("((1,2)3"), Error);
    EXPECT_THROW(text::parse_forest("(1)2"), Error);
    EXPECT_THROW(text::parse_forest("1 2,3"), Error);
    EXPECT_THROW(text::parse_forest("2 1"), Error);  // labels out of postorder
}

}  // namespace
}  // namespace pinnacle
