#pragma once

#include <string>
#include <string_view>

#include "pinnacle/blocks.hpp"
#include "pinnacle/forest.hpp"
#include "pinnacle/perm.hpp"
#include "pinnacle/walks.hpp"

namespace pinnacle::text {

// Comma-separated integers; the empty string is the empty list.
std::vector<std::int64_t> parse_int_list(std::string_view csv);
std::string format_int_list(std::span<const std::int64_t> values);  // "3,6,7"
std::string format_set(std::span<const std::int64_t> values);       // "{3,6,7}"

Permutation parse_permutation(std::string_view csv);  // "5,7,6,4,2,3,1,8"
std::string format_permutation(const Permutation& perm);

// "[10,6,1,2,5,3,4,8,9,7]"; the stored rotation starts at the sentinel.
CyclicPermutation parse_cycle(std::string_view body);
std::string format_cycle(const CyclicPermutation& cyc);

// "[10r,6r,1r,2l,...]" read against the given candidate.
MarkedCyclicPermutation parse_marked_cycle(std::string_view body, const PinnacleCandidate& cand);
std::string format_marked_cycle(const MarkedCyclicPermutation& marked);

// Space-separated tokens <kind><label><side>, e.g. "U1R F1L D2L"; the
// member set is inferred from the slanted steps.
DecoratedMotzkinWalk parse_walk(std::string_view body);
std::string format_walk(const DecoratedMotzkinWalk& walk);

Block parse_block(std::string_view bits);  // "0010011"
std::string format_block(const Block& block);

// Leaf: "label".  Internal: "(left,right)label".  Trees space-separated,
// e.g. "1 ((2,3)4,5)6 7".
Forest parse_forest(std::string_view body);
std::string format_forest(const Forest& forest);

}  // namespace pinnacle::text
