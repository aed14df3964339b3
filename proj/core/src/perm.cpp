#include "pinnacle/perm.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pinnacle {

Permutation::Permutation(std::vector<std::int64_t> values, bool multiset)
    : values_(std::move(values)), multiset_(multiset) {}

Permutation::Permutation(std::vector<std::int64_t> values) : Permutation(std::move(values), false) {
    std::set<std::int64_t> seen;
    for (std::int64_t v : values_) {
        if (v < 1) throw Error("plain permutations hold positive values, got " + std::to_string(v));
        if (!seen.insert(v).second)
            throw Error("plain permutations hold distinct values, " + std::to_string(v) + " repeats");
    }
}

Permutation Permutation::multiset(std::vector<std::int64_t> values) {
    std::map<std::int64_t, int> mult;
    std::int64_t max_v = 0;
    for (std::int64_t v : values) {
        if (v < 0) throw Error("multiset permutations hold non-negative values");
        ++mult[v];
        max_v = std::max(max_v, v);
    }
    for (const auto& [v, m] : mult) {
        if (m > 1 && v != 0 && v != max_v)
            throw Error("only 0 and the largest value may repeat, " + std::to_string(v) +
                        " occurs " + std::to_string(m) + " times");
    }
    return Permutation(std::move(values), true);
}

std::int64_t Permutation::max_value() const {
    if (values_.empty()) return 0;
    return *std::max_element(values_.begin(), values_.end());
}

std::vector<std::int64_t> pinnacle_set(const Permutation& perm) {
    if (perm.size() == 0) throw Error("pinnacle set of an empty permutation is undefined");
    auto v = perm.values();
    std::vector<std::int64_t> pins;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] > v[i - 1] && v[i] > v[i + 1]) pins.push_back(v[i]);
    std::sort(pins.begin(), pins.end());
    return pins;
}

namespace {

// Rotation starting at an occurrence of the maximum; when the maximum
// repeats, the lexicographically least of those rotations.
std::vector<std::int64_t> canonical_rotation(std::vector<std::int64_t> values) {
    if (values.empty()) throw Error("cyclic permutations are nonempty");
    const std::int64_t max_v = *std::max_element(values.begin(), values.end());
    std::vector<std::int64_t> best;
    const std::size_t n = values.size();
    for (std::size_t s = 0; s < n; ++s) {
        if (values[s] != max_v) continue;
        std::vector<std::int64_t> rot(n);
        for (std::size_t i = 0; i < n; ++i) rot[i] = values[(s + i) % n];
        if (best.empty() || rot < best) best = std::move(rot);
    }
    return best;
}

}  // namespace

CyclicPermutation::CyclicPermutation(std::vector<std::int64_t> values, bool sentinel)
    : rotation_(canonical_rotation(std::move(values))), has_sentinel_(sentinel) {
    if (has_sentinel_) {
        if (std::count(rotation_.begin(), rotation_.end(), rotation_.front()) != 1)
            throw Error("the sentinel must be a unique maximum");
    }
}

CyclicPermutation CyclicPermutation::plain(std::vector<std::int64_t> values) {
    return CyclicPermutation(std::move(values), false);
}

CyclicPermutation CyclicPermutation::with_sentinel(std::vector<std::int64_t> values) {
    return CyclicPermutation(std::move(values), true);
}

std::int64_t CyclicPermutation::sentinel() const {
    if (!has_sentinel_) throw Error("cycle has no sentinel");
    return rotation_.front();
}

CyclicClassification cyclic_pinnacles_and_vales(const CyclicPermutation& cyc) {
    CyclicClassification out;
    const auto& r = cyc.rotation();
    const std::size_t n = r.size();
    if (n < 2) return out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t prev = r[(i + n - 1) % n];
        const std::int64_t next = r[(i + 1) % n];
        if (r[i] > prev && r[i] > next) out.pinnacles.push_back(r[i]);
        if (r[i] < prev && r[i] < next) out.vales.push_back(r[i]);
    }
    std::sort(out.pinnacles.begin(), out.pinnacles.end());
    std::sort(out.vales.begin(), out.vales.end());
    return out;
}

CyclicPermutation append_sentinel(const Permutation& perm) {
    std::vector<std::int64_t> cycle;
    cycle.reserve(perm.size() + 1);
    cycle.push_back(perm.max_value() + 1);
    cycle.insert(cycle.end(), perm.values().begin(), perm.values().end());
    return CyclicPermutation::with_sentinel(std::move(cycle));
}

Permutation strip_sentinel(const CyclicPermutation& cyc) {
    if (!cyc.has_sentinel()) throw Error("strip_sentinel needs a sentinel");
    const auto& r = cyc.rotation();  // canonical: sentinel first
    return Permutation(std::vector<std::int64_t>(r.begin() + 1, r.end()));
}

std::vector<std::int64_t> standardize(std::span<const std::int64_t> seq,
                                      std::vector<std::int64_t> target) {
    if (seq.size() != target.size())
        throw Error("standardize: sequence and target sizes differ (" +
                    std::to_string(seq.size()) + " vs " + std::to_string(target.size()) + ")");
    std::sort(target.begin(), target.end());
    if (std::adjacent_find(target.begin(), target.end()) != target.end())
        throw Error("standardize: target values must be distinct");
    std::vector<std::int64_t> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("standardize: sequence values must be distinct");
    std::vector<std::int64_t> out;
    out.reserve(seq.size());
    for (std::int64_t v : seq) {
        const auto rank = std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
        out.push_back(target[rank]);
    }
    return out;
}

Ordering relative_order(const Permutation& perm, std::vector<std::int64_t> subset) {
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw Error("relative_order: subset values must be distinct");
    Ordering out;
    out.reserve(subset.size());
    for (std::int64_t v : perm.values())
        if (std::binary_search(subset.begin(), subset.end(), v)) out.push_back(v);
    if (out.size() != subset.size())
        throw Error("relative_order: subset has values missing from the permutation");
    return out;
}

PinnacleCandidate::PinnacleCandidate(std::vector<std::int64_t> values, std::int64_t n)
    : values_(std::move(values)), n_(n) {
    if (n_ < 0) throw Error("ambient size must be non-negative");
    std::sort(values_.begin(), values_.end());
    if (std::adjacent_find(values_.begin(), values_.end()) != values_.end())
        throw Error("candidate values must be distinct");
    for (std::int64_t v : values_)
        if (v < 1 || v > n_)
            throw Error("candidate value " + std::to_string(v) + " outside [1, " +
                        std::to_string(n_) + "]");
}

bool PinnacleCandidate::contains(std::int64_t v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

std::vector<std::int64_t> PinnacleCandidate::first_nonmembers(int count) const {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 1; static_cast<int>(out.size()) < count; ++v)
        if (!contains(v)) out.push_back(v);
    return out;
}

Admissibility check_admissible(const PinnacleCandidate& cand) {
    const auto vals = cand.values();
    for (std::size_t t = 1; t <= vals.size(); ++t) {
        const std::int64_t p = vals[t - 1];
        // t members are <= p; the p-1 values below p include t-1 members.
        const std::int64_t below = p - static_cast<std::int64_t>(t);
        if (static_cast<std::int64_t>(t) >= below) {
            return {false, "element " + std::to_string(p) + ": " + std::to_string(t) +
                               " members at or below it but only " + std::to_string(below) +
                               " smaller non-members"};
        }
    }
    return {true, ""};
}

bool is_admissible(const PinnacleCandidate& cand) { return check_admissible(cand).admissible; }

}  // namespace pinnacle
