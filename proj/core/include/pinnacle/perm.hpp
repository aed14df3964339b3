#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pinnacle/error.hpp"

namespace pinnacle {

enum class Side { left, right };

// A linear arrangement of values.  Plain mode holds distinct positive
// integers.  Multiset mode additionally allows repeats, but only of the
// value 0 and of the single largest value.
class Permutation {
public:
    explicit Permutation(std::vector<std::int64_t> values);
    static Permutation multiset(std::vector<std::int64_t> values);

    std::span<const std::int64_t> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool is_multiset() const noexcept { return multiset_; }
    std::int64_t max_value() const;  // 0 when empty

    bool operator==(const Permutation& rhs) const noexcept {
        return values_ == rhs.values_;
    }

private:
    Permutation(std::vector<std::int64_t> values, bool multiset);
    std::vector<std::int64_t> values_;
    bool multiset_;
};

// Interior values strictly larger than both neighbors, ascending.
// End positions never qualify, so sequences of length <= 2 give {}.
std::vector<std::int64_t> pinnacle_set(const Permutation& perm);

// A rotation-equivalence class.  The stored rotation is canonical: it
// starts at the sentinel when one is designated, otherwise at the maximum
// (lexicographically least such rotation if the maximum repeats).
class CyclicPermutation {
public:
    static CyclicPermutation plain(std::vector<std::int64_t> values);
    // Designates the unique maximum as the sentinel.
    static CyclicPermutation with_sentinel(std::vector<std::int64_t> values);

    const std::vector<std::int64_t>& rotation() const noexcept { return rotation_; }
    std::size_t size() const noexcept { return rotation_.size(); }
    bool has_sentinel() const noexcept { return has_sentinel_; }
    std::int64_t sentinel() const;

    bool operator==(const CyclicPermutation& rhs) const noexcept {
        return rotation_ == rhs.rotation_ && has_sentinel_ == rhs.has_sentinel_;
    }

private:
    CyclicPermutation(std::vector<std::int64_t> values, bool sentinel);
    std::vector<std::int64_t> rotation_;
    bool has_sentinel_;
};

struct CyclicClassification {
    std::vector<std::int64_t> pinnacles;  // ascending multiset
    std::vector<std::int64_t> vales;      // ascending multiset
};

// Classifies every cycle element against its two cyclic neighbors.
// Length-1 cycles are degenerate: both sets come back empty.
CyclicClassification cyclic_pinnacles_and_vales(const CyclicPermutation& cyc);

// Wraps the sequence into a cycle with a fresh sentinel max_value+1.
CyclicPermutation append_sentinel(const Permutation& perm);

// Inverse of append_sentinel: drops the sentinel, reads off the linear
// order that follows it.
Permutation strip_sentinel(const CyclicPermutation& cyc);

// Order-preserving relabeling of seq onto the target value set.
std::vector<std::int64_t> standardize(std::span<const std::int64_t> seq,
                                      std::vector<std::int64_t> target);

using Ordering = std::vector<std::int64_t>;

// Subsequence of perm restricted to the given values.
Ordering relative_order(const Permutation& perm, std::vector<std::int64_t> subset);

// A set of candidate pinnacle values inside the ambient interval [1, n].
// Candidates may be inadmissible; realizability is a separate question.
class PinnacleCandidate {
public:
    PinnacleCandidate(std::vector<std::int64_t> values, std::int64_t n);

    std::span<const std::int64_t> values() const noexcept { return values_; }  // ascending
    std::int64_t n() const noexcept { return n_; }
    int k() const noexcept { return static_cast<int>(values_.size()); }
    bool contains(std::int64_t v) const;
    // The count smallest positive integers outside the set (not capped at n).
    std::vector<std::int64_t> first_nonmembers(int count) const;

    bool operator==(const PinnacleCandidate& rhs) const noexcept {
        return n_ == rhs.n_ && values_ == rhs.values_;
    }

private:
    std::vector<std::int64_t> values_;
    std::int64_t n_;
};

struct Admissibility {
    bool admissible;
    std::string reason;  // empty when admissible
};

// A candidate is realizable as a pinnacle set iff every member has more
// smaller non-members than members at or below it.
Admissibility check_admissible(const PinnacleCandidate& cand);
bool is_admissible(const PinnacleCandidate& cand);

}  // namespace pinnacle
