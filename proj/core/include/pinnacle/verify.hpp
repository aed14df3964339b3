#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pinnacle/count.hpp"

namespace pinnacle::verify {

struct CheckResult {
    std::string name;
    bool passed;
    std::uint64_t instances;  // cases inspected
    std::string detail;       // first failure, empty when passed
};

// Fast counts against a full S_n scan, every candidate set, n = 1..max_n.
CheckResult check_counts_match_enumeration(std::int64_t max_n);

// Subset-weighted sums of scanned counts against the walk sums.
CheckResult check_weighted_identity(std::int64_t max_n);

// Walk and cycle enumerations have matching sizes, both maps are mutually
// inverse bijections, and a pinned example keeps its exact image.
CheckResult check_walk_cycle_bijection(std::int64_t max_n);

// Ordering recursion against scanned ordering sets, all compact
// candidates with up to max_k members, plus the relabeling closure of the
// scanned sets.
CheckResult check_ordering_recursion(int max_k);

// Closed-form segregated counts against scanned block counts.
CheckResult check_segregated_formula();

// Seam convolution against scanned counts for every split of every short
// block, independent of the split point.
CheckResult check_block_concatenation();

// Encode/decode round trips; encoding succeeds exactly on ballot words.
CheckResult check_forest_roundtrip(std::int64_t max_n);

// Split-product identity on every eligible forest.
CheckResult check_half_product(std::int64_t max_n);

// Number of realizable candidate sets in [n] equals the middle binomial
// coefficient C(n-1, floor((n-1)/2)).
CheckResult check_admissible_census(std::int64_t max_n);

// The full battery at its default scales, S_n scans capped by max_n.
std::vector<CheckResult> run_all(std::int64_t max_n);

}  // namespace pinnacle::verify
