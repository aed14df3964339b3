#include "pinnacle/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "pinnacle/orderings.hpp"

namespace pinnacle::oracle {

namespace {

std::vector<std::int64_t> iota_values(std::int64_t n) {
    std::vector<std::int64_t> v(n);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

}  // namespace

Count brute_pinnacle_count(const PinnacleCandidate& cand) {
    const std::int64_t n = cand.n();
    if (n > kMaxScanN)
        throw ScaleGuard("brute_pinnacle_count scans S_n only up to n = " +
                         std::to_string(kMaxScanN));
    if (n == 0) return Count::exact(1);  // the empty arrangement, no pinnacles
    const std::vector<std::int64_t> target(cand.values().begin(), cand.values().end());
    auto v = iota_values(n);
    BigInt hits = 0;
    do {
        if (pinnacle_set(Permutation(v)) == target) ++hits;
    } while (std::next_permutation(v.begin(), v.end()));
    return Count::exact(hits);
}

std::map<std::vector<std::int64_t>, Count> pinnacle_census(std::int64_t n) {
    if (n > kMaxScanN)
        throw ScaleGuard("pinnacle_census scans S_n only up to n = " + std::to_string(kMaxScanN));
    std::map<std::vector<std::int64_t>, Count> census;
    if (n == 0) {
        census.emplace(std::vector<std::int64_t>{}, Count::exact(1));
        return census;
    }
    std::map<std::vector<std::int64_t>, BigInt> raw;
    auto v = iota_values(n);
    do {
        ++raw[pinnacle_set(Permutation(v))];
    } while (std::next_permutation(v.begin(), v.end()));
    for (auto& [key, value] : raw) census.emplace(key, Count::exact(value));
    return census;
}

Count brute_block_count(const Block& block, int extra_top, int extra_zeros) {
    if (extra_top < 0 || extra_zeros < 0) throw Error("extra counts are non-negative");
    const std::int64_t m = block.length();
    if (m + extra_top + extra_zeros > kMaxBlockWeight)
        throw ScaleGuard("brute_block_count scans multisets only up to " +
                         std::to_string(kMaxBlockWeight) + " elements");

    std::vector<std::int64_t> word = iota_values(m);
    word.insert(word.end(), extra_zeros, 0);
    word.insert(word.end(), extra_top, m + 1);
    std::sort(word.begin(), word.end());

    std::vector<std::int64_t> target(block.one_positions());
    target.insert(target.end(), extra_top, m + 1);
    std::sort(target.begin(), target.end());

    BigInt hits = 0;
    do {
        const Permutation arrangement = Permutation::multiset(word);
        if (pinnacle_set(arrangement) != target) continue;
        const auto cls = cyclic_pinnacles_and_vales(append_sentinel(arrangement));
        const auto zero_vales = std::count(cls.vales.begin(), cls.vales.end(), 0);
        if (zero_vales == extra_zeros) ++hits;
    } while (std::next_permutation(word.begin(), word.end()));
    return Count::exact(hits);
}

std::set<Ordering> brute_orderings(const PinnacleCandidate& compact, int tracked) {
    const int k = compact.k();
    if (k > kMaxOrderingsK)
        throw ScaleGuard("brute_orderings scans only up to " + std::to_string(kMaxOrderingsK) +
                         " members");
    // Reuse the state type purely for its compactness validation.
    OrderingState state(compact, tracked);
    std::vector<std::int64_t> watched(compact.values().begin(), compact.values().end());
    const auto low = compact.first_nonmembers(tracked);
    watched.insert(watched.end(), low.begin(), low.end());

    const std::vector<std::int64_t> members(compact.values().begin(), compact.values().end());
    std::set<Ordering> out;
    auto v = iota_values(compact.n());
    do {
        const Permutation perm(v);
        if (pinnacle_set(perm) == members) out.insert(relative_order(perm, watched));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<DecoratedMotzkinWalk> enumerate_decorated_walks(const PinnacleCandidate& cand) {
    const std::int64_t n = cand.n();
    if (n > kMaxWalkN)
        throw ScaleGuard("walk enumeration is capped at n = " + std::to_string(kMaxWalkN));
    std::vector<DecoratedMotzkinWalk> out;
    std::vector<WalkStep> steps;
    auto rec = [&](auto&& self, int height) -> void {
        const std::int64_t t = static_cast<std::int64_t>(steps.size());
        if (t == n) {
            out.emplace_back(steps, cand);
            return;
        }
        const std::int64_t number = n - t;
        const bool last = t + 1 == n;
        auto extend = [&](StepKind kind, Side side) {
            const int next = height + (kind == StepKind::up ? 1 : kind == StepKind::down ? -1 : 0);
            if (next < (last ? -1 : 0)) return;
            for (int label = 1; label <= height + 1; ++label) {
                steps.push_back({kind, label, side});
                self(self, next);
                steps.pop_back();
            }
        };
        if (cand.contains(number)) {
            extend(StepKind::down, Side::left);
            extend(StepKind::up, Side::right);
        } else {
            extend(StepKind::flat, Side::left);
            extend(StepKind::flat, Side::right);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<MarkedCyclicPermutation> enumerate_marked_cycles(const PinnacleCandidate& cand) {
    const std::int64_t n = cand.n();
    if (n > kMaxWalkN)
        throw ScaleGuard("cycle enumeration is capped at n = " + std::to_string(kMaxWalkN));
    std::vector<MarkedCyclicPermutation> out;
    auto tail = iota_values(n);
    do {
        std::vector<std::int64_t> rotation{n + 1};
        rotation.insert(rotation.end(), tail.begin(), tail.end());

        bool eligible = true;
        std::vector<std::size_t> vales;
        std::vector<Side> marks(rotation.size(), Side::right);
        const std::size_t sz = rotation.size();
        for (std::size_t i = 1; i < sz && eligible; ++i) {
            const std::int64_t prev = rotation[(i + sz - 1) % sz];
            const std::int64_t next = rotation[(i + 1) % sz];
            const std::int64_t v = rotation[i];
            if (v < prev && v < next) {
                vales.push_back(i);  // free mark
            } else if (v > prev && v > next) {
                eligible = cand.contains(v);
            } else if (!cand.contains(v)) {
                marks[i] = prev < v ? Side::left : Side::right;
            }
        }
        if (!eligible) continue;

        const CyclicPermutation cycle = CyclicPermutation::with_sentinel(rotation);
        for (std::uint64_t mask = 0; mask < (1ull << vales.size()); ++mask) {
            std::vector<Side> chosen = marks;
            for (std::size_t b = 0; b < vales.size(); ++b)
                chosen[vales[b]] = (mask >> b & 1) ? Side::right : Side::left;
            out.emplace_back(cycle, std::move(chosen), cand);
        }
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

}  // namespace pinnacle::oracle
