#pragma once

#include <cstddef>

#include "pinnacle/count.hpp"
#include "pinnacle/perm.hpp"

namespace pinnacle {

// Standardizes the candidate together with its k+1 smallest non-members
// onto [2k+1].  Admissible-ordering counts are invariant under this map.
PinnacleCandidate compactify(const PinnacleCandidate& cand);

// Drops the smallest member and shifts the rest down by 2, landing in
// [2(k-1)+1].  The input must be compact and nonempty.
PinnacleCandidate reduction_operator(const PinnacleCandidate& cand);

// A compact candidate plus the number of designated low non-members that
// are tracked alongside the members.
class OrderingState {
public:
    OrderingState(PinnacleCandidate cand, int tracked);

    const PinnacleCandidate& candidate() const noexcept { return cand_; }
    int tracked() const noexcept { return tracked_; }

private:
    PinnacleCandidate cand_;
    int tracked_;
};

struct OrderingCount {
    Count value;
    std::size_t memo_entries;  // distinct (depth, tracked) pairs computed
};

// Counts the orderings of the members plus the tracked low non-members
// that some permutation realizes with exactly the member set on top.
// Runs the three-branch reduction recursion with memoization; the tracked
// count must stay below the smallest member.
OrderingCount count_orderings_stats(const OrderingState& state,
                                    const ArithMode& mode = ArithMode::exact());
Count count_orderings(const OrderingState& state, const ArithMode& mode = ArithMode::exact());

// Orderings of the member set alone, compactifying first.
Count count_admissible_orderings(const PinnacleCandidate& cand,
                                 const ArithMode& mode = ArithMode::exact());

}  // namespace pinnacle
