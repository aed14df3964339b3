#include "pinnacle/orderings.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace pinnacle {

PinnacleCandidate compactify(const PinnacleCandidate& cand) {
    const int k = cand.k();
    std::vector<std::int64_t> merged(cand.values().begin(), cand.values().end());
    const auto nonmembers = cand.first_nonmembers(k + 1);
    merged.insert(merged.end(), nonmembers.begin(), nonmembers.end());
    std::sort(merged.begin(), merged.end());
    std::vector<std::int64_t> compact;
    compact.reserve(k);
    for (std::int64_t v : cand.values()) {
        const auto rank = std::lower_bound(merged.begin(), merged.end(), v) - merged.begin();
        compact.push_back(rank + 1);
    }
    return PinnacleCandidate(std::move(compact), 2 * static_cast<std::int64_t>(k) + 1);
}

PinnacleCandidate reduction_operator(const PinnacleCandidate& cand) {
    const int k = cand.k();
    if (k == 0) throw Error("reduction of an empty candidate");
    if (cand.n() != 2 * static_cast<std::int64_t>(k) + 1)
        throw Error("reduction needs a compact candidate (ambient size 2k+1)");
    std::vector<std::int64_t> values;
    values.reserve(k - 1);
    for (int t = 1; t < k; ++t) values.push_back(cand.values()[t] - 2);
    return PinnacleCandidate(std::move(values), 2 * static_cast<std::int64_t>(k) - 1);
}

OrderingState::OrderingState(PinnacleCandidate cand, int tracked)
    : cand_(std::move(cand)), tracked_(tracked) {
    const int k = cand_.k();
    if (cand_.n() != 2 * static_cast<std::int64_t>(k) + 1)
        throw Error("ordering states hold compact candidates (ambient size 2k+1)");
    if (tracked_ < 0 || tracked_ > k + 1)
        throw Error("tracked non-member count " + std::to_string(tracked_) + " outside [0, " +
                    std::to_string(k + 1) + "]");
}

namespace {

struct Recursion {
    std::vector<PinnacleCandidate> chain;  // successive reductions
    std::vector<std::map<int, Count>> memo;
    ArithMode mode;

    explicit Recursion(PinnacleCandidate root, const ArithMode& m) : mode(m) {
        chain.push_back(std::move(root));
        memo.emplace_back();
    }

    // Only reached when some branch is live, which forces the smallest
    // member of chain[depth] to be at least 3.
    void ensure_depth(std::size_t depth) {
        while (chain.size() <= depth) {
            chain.push_back(reduction_operator(chain.back()));
            memo.emplace_back();
        }
    }

    Count run(std::size_t depth, int tracked) {
        const PinnacleCandidate& set = chain[depth];
        if (set.k() == 0) {
            if (tracked != 0 && tracked != 1)
                throw Error("internal: base case reached with tracked = " +
                            std::to_string(tracked));
            return Count::of(mode, 1);
        }
        const std::int64_t least = set.values()[0];
        if (tracked >= least)
            throw Error("internal: tracked count reached the smallest member");
        if (auto it = memo[depth].find(tracked); it != memo[depth].end()) return it->second;

        // Each live branch guarantees the child argument stays below the
        // child's smallest member, so the recursion never leaves its domain.
        Count total = Count::of(mode, 0);
        if (tracked >= 2) {
            ensure_depth(depth + 1);
            total += Count::of(mode, static_cast<std::uint64_t>(tracked) * (tracked - 1)) *
                     run(depth + 1, tracked - 1);
        }
        if (tracked >= 1 && least > tracked + 1) {
            ensure_depth(depth + 1);
            total += Count::of(mode, 2 * static_cast<std::uint64_t>(tracked)) *
                     run(depth + 1, tracked);
        }
        if (least > tracked + 2) {
            ensure_depth(depth + 1);
            total += run(depth + 1, tracked + 1);
        }
        memo[depth].emplace(tracked, total);
        return total;
    }

    std::size_t entries() const {
        std::size_t n = 0;
        for (const auto& m : memo) n += m.size();
        return n;
    }
};

}  // namespace

OrderingCount count_orderings_stats(const OrderingState& state, const ArithMode& mode) {
    const PinnacleCandidate& cand = state.candidate();
    if (cand.k() > 0 && state.tracked() >= cand.values()[0])
        throw Error("tracked count " + std::to_string(state.tracked()) +
                    " must stay below the smallest member " + std::to_string(cand.values()[0]));
    Recursion rec(cand, mode);
    Count value = rec.run(0, state.tracked());
    return {std::move(value), rec.entries()};
}

Count count_orderings(const OrderingState& state, const ArithMode& mode) {
    return count_orderings_stats(state, mode).value;
}

Count count_admissible_orderings(const PinnacleCandidate& cand, const ArithMode& mode) {
    return count_orderings(OrderingState(compactify(cand), 0), mode);
}

}  // namespace pinnacle
