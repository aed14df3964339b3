#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pinnacle/blocks.hpp"
#include "pinnacle/count.hpp"
#include "pinnacle/perm.hpp"
#include "pinnacle/walks.hpp"

namespace pinnacle::oracle {

// Hard ceilings: every enumeration refuses larger inputs outright.
inline constexpr std::int64_t kMaxScanN = 9;         // |S_n| scans
inline constexpr std::int64_t kMaxBlockWeight = 10;  // multiset size for block scans
inline constexpr int kMaxOrderingsK = 3;
inline constexpr std::int64_t kMaxWalkN = 7;

// Scans S_n and counts arrangements with exactly the candidate pinnacles.
Count brute_pinnacle_count(const PinnacleCandidate& cand);

// One S_n scan, histogrammed by pinnacle set.
std::map<std::vector<std::int64_t>, Count> pinnacle_census(std::int64_t n);

// Scans every arrangement of {1..m} plus extra_zeros zeros and extra_top
// copies of m+1; keeps those whose pinnacle multiset is the block's ones
// plus the top copies and whose zeros are all cyclic vales.
Count brute_block_count(const Block& block, int extra_top, int extra_zeros);

// Scans S_{2k+1} for the compact candidate and collects the orderings of
// the members plus the tracked smallest non-members.
std::set<Ordering> brute_orderings(const PinnacleCandidate& compact, int tracked);

// All decorated walks for the candidate, by direct search.
std::vector<DecoratedMotzkinWalk> enumerate_decorated_walks(const PinnacleCandidate& cand);

// All marked sentinel cycles for the candidate, by scanning cycles of
// [n+1] and expanding the free vale marks.
std::vector<MarkedCyclicPermutation> enumerate_marked_cycles(const PinnacleCandidate& cand);

}  // namespace pinnacle::oracle
