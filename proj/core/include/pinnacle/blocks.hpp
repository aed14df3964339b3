#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pinnacle/count.hpp"
#include "pinnacle/kernel.hpp"
#include "pinnacle/perm.hpp"

namespace pinnacle {

// A 0/1 word stored as its length plus the positions of its ones, so
// words of astronomical length stay cheap.  Bits are only materialized
// on demand and only for small words.
class Block {
public:
    Block(std::int64_t length, std::vector<std::int64_t> one_positions);  // 1-based, ascending
    static Block from_bits(const std::vector<int>& bits);

    std::int64_t length() const noexcept { return length_; }
    const std::vector<std::int64_t>& one_positions() const noexcept { return ones_; }
    int ones_count() const noexcept { return static_cast<int>(ones_.size()); }

    bool is_segregated() const;     // all zeros then all ones
    std::vector<int> bits() const;  // refuses to materialize huge words

    bool operator==(const Block& rhs) const noexcept = default;

private:
    std::int64_t length_;
    std::vector<std::int64_t> ones_;
};

// The indicator word of the candidate inside [1, n].
Block block_of(const PinnacleCandidate& cand);
PinnacleCandidate pinnacles_of(const Block& block);

// Every nonempty prefix holds strictly more zeros than ones.  This is
// exactly admissibility of the word's one-positions.
bool is_ballot(const Block& block);

// Arrangements of {1..x+y} plus extra_zeros copies of 0 and extra_top
// copies of x+y+1 whose pinnacle multiset is the y largest values plus
// the top copies, with every 0 forced into a cyclic vale.  Closed form;
// the tables must cover extra_top + y + 1.
Count segregated_count(std::int64_t zeros, std::int64_t ones, int extra_top, int extra_zeros,
                       const KernelTables& tables);

// Splits the arrangement count of a concatenated word across the seam:
//   p(left+right, top, pads) = sum_a p(left, a-1, pads) * p(right, top, a).
// The lookup receives the exact block objects passed here.  Left factors
// that vanish short-circuit the right lookup.
Count concat_count(const Block& left, const Block& right, int extra_top, int extra_zeros,
                   const std::function<Count(const Block&, int, int)>& lookup);

// Number of arrangements of [n] whose pinnacle set is exactly the
// candidate.  Decomposes the indicator word into maximal zeros-then-ones
// pieces, evaluates each by the closed form, and folds right to left.
// Cost is O(k^2 log n + k^4) arithmetic operations.
Count fast_count(const PinnacleCandidate& cand, const ArithMode& mode = ArithMode::exact());

}  // namespace pinnacle
