#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pinnacle/count.hpp"
#include "pinnacle/perm.hpp"

namespace pinnacle {

// Height profile (r_0, ..., r_k) with r_0 = 0 and unit steps, staying
// non-negative everywhere except that the final height may be -1.
class ModifiedDyckWalk {
public:
    explicit ModifiedDyckWalk(std::vector<int> heights);
    const std::vector<int>& heights() const noexcept { return heights_; }
    int length() const noexcept { return static_cast<int>(heights_.size()) - 1; }

    bool operator==(const ModifiedDyckWalk& rhs) const noexcept = default;

private:
    std::vector<int> heights_;
};

// All such profiles of length k, ordered lexicographically by heights.
std::vector<ModifiedDyckWalk> enumerate_modified_dyck(int k);

enum class StepKind { up, down, flat };

struct WalkStep {
    StepKind kind;
    int label;  // 1-based numeric label, at most start height + 1
    Side side;

    bool operator==(const WalkStep&) const noexcept = default;
};

// An n-step labeled Motzkin-like walk read left to right; the step at
// index t carries the number n - t.  Steps numbered by a candidate member
// are slanted (down carries a left side, up a right side); all other
// steps are flat with a free side.  Every step starts at height >= 0 and
// only the last step may end at -1.
class DecoratedMotzkinWalk {
public:
    DecoratedMotzkinWalk(std::vector<WalkStep> steps, const PinnacleCandidate& cand);
    // Infers the candidate from the slanted steps.
    static DecoratedMotzkinWalk infer(std::vector<WalkStep> steps);

    const std::vector<WalkStep>& steps() const noexcept { return steps_; }
    std::int64_t n() const noexcept { return static_cast<std::int64_t>(steps_.size()); }
    const PinnacleCandidate& candidate() const noexcept { return candidate_; }
    // Height before each step; entry n is the final height.
    std::vector<int> height_profile() const;

    bool operator==(const DecoratedMotzkinWalk& rhs) const noexcept {
        return steps_ == rhs.steps_ && candidate_ == rhs.candidate_;
    }

private:
    std::vector<WalkStep> steps_;
    PinnacleCandidate candidate_;
};

// A sentinel cycle over [n+1] with one left/right mark per element, taken
// relative to a candidate set: members that are not cyclic vales sit to
// the right, non-members between two larger values inherit the window
// direction, cyclic vales are free, the sentinel is marked right.
class MarkedCyclicPermutation {
public:
    MarkedCyclicPermutation(CyclicPermutation cycle, std::vector<Side> marks,
                            const PinnacleCandidate& cand);

    const CyclicPermutation& cycle() const noexcept { return cycle_; }
    // Aligned with cycle().rotation().
    const std::vector<Side>& marks() const noexcept { return marks_; }
    const PinnacleCandidate& candidate() const noexcept { return candidate_; }

    bool operator==(const MarkedCyclicPermutation& rhs) const noexcept {
        return cycle_ == rhs.cycle_ && marks_ == rhs.marks_ && candidate_ == rhs.candidate_;
    }

private:
    CyclicPermutation cycle_;
    std::vector<Side> marks_;
    PinnacleCandidate candidate_;
};

// Right-hand side of the subset-weighted counting identity:
//   2^(n-k) * sum over height profiles of prod (r_i + 1)^(p_i - p_{i+1}),
// with the candidate taken in decreasing order, p_0 = n+1, p_{k+1} = 1.
Count weighted_walk_sum(const PinnacleCandidate& cand,
                        const ArithMode& mode = ArithMode::exact());

// Same weighted sum taken over all 2^k unconstrained unit-step walks;
// profiles that dip below the floor contribute zero factors.
Count weighted_walk_sum_relaxed(const PinnacleCandidate& cand,
                                const ArithMode& mode = ArithMode::exact());

// Left-hand side of the identity: sum over subsets Q of the candidate of
// 2^(|Q|+1) * counter(Q), with counter supplying the pinnacle count.
Count weighted_sum_lhs(const PinnacleCandidate& cand,
                       const std::function<Count(const PinnacleCandidate&)>& counter);

// Walk-to-cycle encoding: inserts n, n-1, ..., 1 into the sentinel cycle,
// the step label picking the receiving gap, the mark of the smallest
// element in that gap picking the side.
MarkedCyclicPermutation f_map(const DecoratedMotzkinWalk& walk);

// Inverse of f_map: peels off 1, 2, ..., n and reads each step backwards.
DecoratedMotzkinWalk g_map(const MarkedCyclicPermutation& marked);

}  // namespace pinnacle
