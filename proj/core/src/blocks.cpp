#include "pinnacle/blocks.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace pinnacle {

namespace {
constexpr std::int64_t kMaxMaterialized = 1 << 22;
}

Block::Block(std::int64_t length, std::vector<std::int64_t> one_positions)
    : length_(length), ones_(std::move(one_positions)) {
    if (length_ < 1) throw Error("blocks are nonempty");
    std::int64_t prev = 0;
    for (std::int64_t q : ones_) {
        if (q <= prev) throw Error("one positions must be ascending and distinct");
        if (q > length_)
            throw Error("one position " + std::to_string(q) + " beyond length " +
                        std::to_string(length_));
        prev = q;
    }
}

Block Block::from_bits(const std::vector<int>& bits) {
    std::vector<std::int64_t> ones;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw Error("block bits are 0 or 1");
        if (bits[i] == 1) ones.push_back(static_cast<std::int64_t>(i) + 1);
    }
    return Block(static_cast<std::int64_t>(bits.size()), std::move(ones));
}

bool Block::is_segregated() const {
    const std::int64_t y = ones_count();
    for (std::int64_t t = 0; t < y; ++t)
        if (ones_[t] != length_ - y + 1 + t) return false;
    return true;
}

std::vector<int> Block::bits() const {
    if (length_ > kMaxMaterialized)
        throw Error("refusing to materialize " + std::to_string(length_) + " bits");
    std::vector<int> out(length_, 0);
    for (std::int64_t q : ones_) out[q - 1] = 1;
    return out;
}

Block block_of(const PinnacleCandidate& cand) {
    return Block(cand.n(), std::vector<std::int64_t>(cand.values().begin(), cand.values().end()));
}

PinnacleCandidate pinnacles_of(const Block& block) {
    return PinnacleCandidate(block.one_positions(), block.length());
}

bool is_ballot(const Block& block) {
    // The running zero surplus only shrinks at a one, so positions of
    // ones are the binding prefixes: the t-th one must sit past 2t.
    const auto& ones = block.one_positions();
    for (std::size_t t = 1; t <= ones.size(); ++t)
        if (ones[t - 1] <= 2 * static_cast<std::int64_t>(t)) return false;
    return true;
}

Count segregated_count(std::int64_t zeros, std::int64_t ones, int extra_top, int extra_zeros,
                       const KernelTables& tables) {
    if (zeros < 0 || ones < 0 || extra_top < 0 || extra_zeros < 0)
        throw Error("segregated_count arguments are non-negative");
    if (zeros + ones == 0) throw Error("empty block");
    if (ones > tables.bound()) throw Error("segregated_count: ones exceed the table bound");
    const int c = extra_top + static_cast<int>(ones) + 1;

    Count inner = tables.zero();
    for (int m = 0; m <= std::min(extra_zeros, c); ++m) {
        const Count s = tables.stirling2(static_cast<std::uint64_t>(zeros), c - m);
        if (s.is_zero()) continue;
        inner += tables.binomial(c - m, extra_zeros - m) * s * tables.factorial_ratio(c, m);
    }
    if (inner.is_zero()) return inner;
    // inner != 0 forces some c - m <= zeros, so the power of two below has
    // a non-negative exponent zeros + extra_zeros - c.
    return tables.pow2_shifted(static_cast<std::uint64_t>(zeros), extra_zeros - c) *
           tables.factorial_ratio(c - 1, extra_top) * inner;
}

Count concat_count(const Block& left, const Block& right, int extra_top, int extra_zeros,
                   const std::function<Count(const Block&, int, int)>& lookup) {
    if (extra_top < 0 || extra_zeros < 0) throw Error("concat_count arguments are non-negative");
    std::optional<Count> total;
    for (int a = 1; a <= right.ones_count() + extra_top + 1; ++a) {
        const Count lhs = lookup(left, a - 1, extra_zeros);
        if (!total) total = Count::of(lhs.mode(), 0);
        if (lhs.is_zero()) continue;
        *total += lhs * lookup(right, extra_top, a);
    }
    return *total;
}

namespace {

struct Piece {
    std::int64_t zeros;
    std::int64_t ones;
};

// Maximal zeros-then-ones pieces, left to right.
std::vector<Piece> decompose(const Block& block) {
    const auto& q = block.one_positions();
    std::vector<Piece> pieces;
    std::int64_t start = 1;
    std::size_t idx = 0;
    while (idx < q.size()) {
        std::size_t run_end = idx;
        while (run_end + 1 < q.size() && q[run_end + 1] == q[run_end] + 1) ++run_end;
        pieces.push_back({q[idx] - start, static_cast<std::int64_t>(run_end - idx + 1)});
        start = q[run_end] + 1;
        idx = run_end + 1;
    }
    if (start <= block.length()) pieces.push_back({block.length() - start + 1, 0});
    return pieces;
}

}  // namespace

Count fast_count(const PinnacleCandidate& cand, const ArithMode& mode) {
    if (cand.n() == 0) return Count::of(mode, 1);  // the empty arrangement
    const int k = cand.k();
    const auto pieces = decompose(block_of(cand));
    const int d = static_cast<int>(pieces.size());

    KernelTables tables(mode, k + 2);
    {
        std::vector<std::pair<std::uint64_t, int>> keys;
        keys.reserve(static_cast<std::size_t>(d) * (k + 2));
        for (const Piece& piece : pieces)
            for (int c = 0; c <= k + 1; ++c)
                keys.emplace_back(static_cast<std::uint64_t>(piece.zeros), c);
        tables.build_cache(keys);
    }

    // trailing_ones[l]: ones strictly after piece l; caps the first factor
    // exponent the fold can request from piece l.
    std::vector<int> trailing_ones(d, 0);
    for (int l = d - 2; l >= 0; --l)
        trailing_ones[l] = trailing_ones[l + 1] + static_cast<int>(pieces[l + 1].ones);

    // counts[l][i][j]: arrangement count of piece l with i top copies and
    // j extra zeros appended.
    std::vector<std::vector<std::vector<Count>>> counts(d);
    for (int l = 0; l < d; ++l) {
        counts[l].resize(trailing_ones[l] + 1);
        for (int i = 0; i <= trailing_ones[l]; ++i) {
            counts[l][i].reserve(k + 2);
            for (int j = 0; j <= k + 1; ++j)
                counts[l][i].push_back(
                    segregated_count(pieces[l].zeros, pieces[l].ones, i, j, tables));
        }
    }

    // Fold right to left: suffix[j] is the count for the word formed by
    // pieces l..d-1 with j extra zeros appended and no top copies.
    std::vector<Count> suffix = counts[d - 1][0];
    for (int l = d - 2; l >= 0; --l) {
        std::vector<Count> next(k + 2, tables.zero());
        for (int j = 0; j <= k + 1; ++j) {
            Count acc = tables.zero();
            for (int a = 1; a <= trailing_ones[l] + 1; ++a) {
                const Count& lhs = counts[l][a - 1][j];
                if (lhs.is_zero()) continue;
                acc += lhs * suffix[a];
            }
            next[j] = std::move(acc);
        }
        suffix = std::move(next);
    }
    return suffix[0];
}

}  // namespace pinnacle
