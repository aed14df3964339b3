#include "pinnacle/walks.hpp"

#include <algorithm>

#include "pinnacle/kernel.hpp"

namespace pinnacle {

namespace {

// Subset and walk enumerations below are exponential in k.
constexpr int kMaxWeightedK = 24;

std::string step_name(std::size_t index, std::int64_t number) {
    return "step " + std::to_string(index) + " (number " + std::to_string(number) + ")";
}

}  // namespace

ModifiedDyckWalk::ModifiedDyckWalk(std::vector<int> heights) : heights_(std::move(heights)) {
    if (heights_.empty()) throw Error("height profile must be nonempty");
    if (heights_[0] != 0) throw Error("height profile must start at 0");
    for (std::size_t i = 1; i < heights_.size(); ++i) {
        const int d = heights_[i] - heights_[i - 1];
        if (d != 1 && d != -1)
            throw Error("height profile must move by unit steps, index " + std::to_string(i));
        const bool last = i + 1 == heights_.size();
        if (heights_[i] < (last ? -1 : 0))
            throw Error("height profile dips too low at index " + std::to_string(i));
    }
}

std::vector<ModifiedDyckWalk> enumerate_modified_dyck(int k) {
    if (k < 0) throw Error("walk length must be non-negative");
    std::vector<ModifiedDyckWalk> out;
    std::vector<int> h{0};
    // Extending with -1 before +1 yields lexicographic order.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(h.size()) == k + 1) {
            out.emplace_back(h);
            return;
        }
        const bool last = static_cast<int>(h.size()) == k;
        for (int d : {-1, 1}) {
            const int next = h.back() + d;
            if (next < (last ? -1 : 0)) continue;
            h.push_back(next);
            self(self);
            h.pop_back();
        }
    };
    rec(rec);
    return out;
}

DecoratedMotzkinWalk::DecoratedMotzkinWalk(std::vector<WalkStep> steps,
                                           const PinnacleCandidate& cand)
    : steps_(std::move(steps)), candidate_(cand) {
    if (candidate_.n() != static_cast<std::int64_t>(steps_.size()))
        throw Error("walk length " + std::to_string(steps_.size()) +
                    " does not match candidate ambient size " + std::to_string(candidate_.n()));
    const std::int64_t n = candidate_.n();
    int h = 0;
    for (std::size_t t = 0; t < steps_.size(); ++t) {
        const std::int64_t number = n - static_cast<std::int64_t>(t);
        const WalkStep& s = steps_[t];
        if (candidate_.contains(number)) {
            if (s.kind == StepKind::flat)
                throw Error(step_name(t, number) + " must be slanted: the number is a member");
            if (s.kind == StepKind::down && s.side != Side::left)
                throw Error(step_name(t, number) + " is a down step and must carry a left side");
            if (s.kind == StepKind::up && s.side != Side::right)
                throw Error(step_name(t, number) + " is an up step and must carry a right side");
        } else if (s.kind != StepKind::flat) {
            throw Error(step_name(t, number) + " must be flat: the number is not a member");
        }
        if (s.label < 1 || s.label > h + 1)
            throw Error(step_name(t, number) + " label " + std::to_string(s.label) +
                        " outside [1, " + std::to_string(h + 1) + "]");
        h += s.kind == StepKind::up ? 1 : s.kind == StepKind::down ? -1 : 0;
        const bool last = t + 1 == steps_.size();
        if (h < (last ? -1 : 0))
            throw Error(step_name(t, number) + " ends below the allowed floor");
    }
}

DecoratedMotzkinWalk DecoratedMotzkinWalk::infer(std::vector<WalkStep> steps) {
    const std::int64_t n = static_cast<std::int64_t>(steps.size());
    std::vector<std::int64_t> members;
    for (std::size_t t = 0; t < steps.size(); ++t)
        if (steps[t].kind != StepKind::flat) members.push_back(n - static_cast<std::int64_t>(t));
    return DecoratedMotzkinWalk(std::move(steps), PinnacleCandidate(std::move(members), n));
}

std::vector<int> DecoratedMotzkinWalk::height_profile() const {
    std::vector<int> h{0};
    for (const WalkStep& s : steps_)
        h.push_back(h.back() + (s.kind == StepKind::up ? 1 : s.kind == StepKind::down ? -1 : 0));
    return h;
}

MarkedCyclicPermutation::MarkedCyclicPermutation(CyclicPermutation cycle, std::vector<Side> marks,
                                                 const PinnacleCandidate& cand)
    : cycle_(std::move(cycle)), marks_(std::move(marks)), candidate_(cand) {
    const std::int64_t n = candidate_.n();
    if (!cycle_.has_sentinel()) throw Error("marked cycles need a sentinel");
    if (cycle_.sentinel() != n + 1)
        throw Error("sentinel must be " + std::to_string(n + 1));
    if (cycle_.size() != static_cast<std::size_t>(n + 1))
        throw Error("cycle must hold the values 1..n+1 exactly");
    const auto& r = cycle_.rotation();
    {
        std::vector<std::int64_t> sorted(r.begin(), r.end());
        std::sort(sorted.begin(), sorted.end());
        for (std::int64_t v = 1; v <= n + 1; ++v)
            if (sorted[v - 1] != v) throw Error("cycle must hold the values 1..n+1 exactly");
    }
    if (marks_.size() != r.size()) throw Error("one mark per cycle element required");
    if (marks_[0] != Side::right) throw Error("the sentinel is marked right");
    const std::size_t sz = r.size();
    for (std::size_t i = 1; i < sz; ++i) {
        const std::int64_t prev = r[(i + sz - 1) % sz];
        const std::int64_t next = r[(i + 1) % sz];
        const std::int64_t v = r[i];
        if (v < prev && v < next) continue;  // cyclic vale: free mark
        if (v > prev && v > next) {
            if (!candidate_.contains(v))
                throw Error("cycle pinnacle " + std::to_string(v) +
                            " does not lie in the candidate set");
            if (marks_[i] != Side::right)
                throw Error("member " + std::to_string(v) + " is not a cyclic vale and must be "
                            "marked right");
            continue;
        }
        // Monotone window.
        if (candidate_.contains(v)) {
            if (marks_[i] != Side::right)
                throw Error("member " + std::to_string(v) + " is not a cyclic vale and must be "
                            "marked right");
        } else if (prev > v && v > next) {
            if (marks_[i] != Side::right)
                throw Error("non-member " + std::to_string(v) +
                            " inside a decreasing window must be marked right");
        } else {
            if (marks_[i] != Side::left)
                throw Error("non-member " + std::to_string(v) +
                            " inside an increasing window must be marked left");
        }
    }
}

namespace {

// Shared walk-sum core: DFS over height profiles with an incremental
// product of (height + 1)^exponent factors.
Count weighted_sum_core(const PinnacleCandidate& cand, const ArithMode& mode, bool relaxed) {
    const int k = cand.k();
    if (k > kMaxWeightedK)
        throw Error("weighted walk sums enumerate 2^k profiles; k = " + std::to_string(k) +
                    " is past the practical limit " + std::to_string(kMaxWeightedK));
    // Descending members framed by n+1 above and 1 below.
    std::vector<std::int64_t> frame;
    frame.reserve(k + 2);
    frame.push_back(cand.n() + 1);
    for (int t = k - 1; t >= 0; --t) frame.push_back(cand.values()[t]);
    frame.push_back(1);
    std::vector<std::uint64_t> exp(k + 1);
    for (int i = 0; i <= k; ++i) exp[i] = static_cast<std::uint64_t>(frame[i] - frame[i + 1]);

    Count total = Count::of(mode, 0);
    auto rec = [&](auto&& self, int i, int height, const Count& partial) -> void {
        if (i == k) {
            total += partial;
            return;
        }
        for (int d : {-1, 1}) {
            const int next = height + d;
            if (!relaxed && next < (i + 1 == k ? -1 : 0)) continue;
            Count extended = partial * fast_pow(Count::of(mode, next + 1), exp[i + 1]);
            // A zero product zeroes the whole subtree; pruning here also
            // keeps the relaxed enumeration away from negative factors.
            if (extended.is_zero()) continue;
            self(self, i + 1, next, extended);
        }
    };
    const Count seed = fast_pow(Count::of(mode, 1), exp[0]);  // (r_0 + 1)^exp = 1
    rec(rec, 0, 0, seed);
    return total * fast_pow(Count::of(mode, 2), static_cast<std::uint64_t>(cand.n() - k));
}

}  // namespace

Count weighted_walk_sum(const PinnacleCandidate& cand, const ArithMode& mode) {
    return weighted_sum_core(cand, mode, false);
}

Count weighted_walk_sum_relaxed(const PinnacleCandidate& cand, const ArithMode& mode) {
    return weighted_sum_core(cand, mode, true);
}

Count weighted_sum_lhs(const PinnacleCandidate& cand,
                       const std::function<Count(const PinnacleCandidate&)>& counter) {
    const int k = cand.k();
    if (k > kMaxWeightedK)
        throw Error("subset-weighted sums enumerate 2^k subsets; k = " + std::to_string(k) +
                    " is past the practical limit " + std::to_string(kMaxWeightedK));
    const auto vals = cand.values();
    Count total;
    bool first = true;
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        std::vector<std::int64_t> subset;
        for (int t = 0; t < k; ++t)
            if (mask >> t & 1) subset.push_back(vals[t]);
        const std::size_t q = subset.size();
        Count c = counter(PinnacleCandidate(std::move(subset), cand.n()));
        Count weighted = c * fast_pow(Count::of(c.mode(), 2), q + 1);
        if (first) {
            total = weighted;
            first = false;
        } else {
            total += weighted;
        }
    }
    return total;
}

namespace {

// Circular doubly-linked node store shared by the two direction maps.
struct CycleNodes {
    std::vector<std::int64_t> value;
    std::vector<Side> mark;
    std::vector<char> boundary;  // member of the candidate set, or the sentinel
    std::vector<int> prev, next;

    int add(std::int64_t v, Side m, bool b) {
        value.push_back(v);
        mark.push_back(m);
        boundary.push_back(b);
        prev.push_back(-1);
        next.push_back(-1);
        return static_cast<int>(value.size()) - 1;
    }

    void insert_after(int anchor, int node) {
        next[node] = next[anchor];
        prev[node] = anchor;
        prev[next[anchor]] = node;
        next[anchor] = node;
    }

    void insert_before(int anchor, int node) { insert_after(prev[anchor], node); }

    void unlink(int node) {
        next[prev[node]] = next[node];
        prev[next[node]] = prev[node];
    }

    // Boundary nodes in clockwise order starting at the given one.
    std::vector<int> boundaries_from(int start) const {
        std::vector<int> out{start};
        for (int u = next[start]; u != start; u = next[u])
            if (boundary[u]) out.push_back(u);
        return out;
    }

    bool gap_available(const std::vector<int>& bs, std::size_t s) const {
        const int lo = bs[s];
        const int hi = bs[(s + 1) % bs.size()];
        return mark[lo] == Side::right && mark[hi] == Side::right;
    }
};

}  // namespace

MarkedCyclicPermutation f_map(const DecoratedMotzkinWalk& walk) {
    const PinnacleCandidate& cand = walk.candidate();
    const std::int64_t n = cand.n();
    CycleNodes nodes;
    const int sentinel = nodes.add(n + 1, Side::right, true);
    nodes.prev[sentinel] = nodes.next[sentinel] = sentinel;

    for (std::size_t t = 0; t < walk.steps().size(); ++t) {
        const WalkStep& step = walk.steps()[t];
        const std::int64_t q = n - static_cast<std::int64_t>(t);

        const auto bs = nodes.boundaries_from(sentinel);
        int found = -1;
        for (std::size_t s = 0, seen = 0; s < bs.size(); ++s) {
            if (!nodes.gap_available(bs, s)) continue;
            if (static_cast<int>(++seen) == step.label) {
                found = static_cast<int>(s);
                break;
            }
        }
        if (found == -1) throw Error("internal: step label exceeds the available gaps");

        const int lo = bs[found];
        const int hi = bs[(found + 1) % bs.size()];
        // Smallest element strictly between the two boundaries.
        int target = -1;
        for (int u = nodes.next[lo]; u != hi; u = nodes.next[u])
            if (target == -1 || nodes.value[u] < nodes.value[target]) target = u;

        const int fresh = nodes.add(q, step.side, step.kind != StepKind::flat);
        if (target == -1)
            nodes.insert_after(lo, fresh);
        else if (nodes.mark[target] == Side::left)
            nodes.insert_before(target, fresh);
        else
            nodes.insert_after(target, fresh);
    }

    std::vector<std::int64_t> rotation;
    std::vector<Side> marks;
    rotation.reserve(n + 1);
    marks.reserve(n + 1);
    int u = sentinel;
    do {
        rotation.push_back(nodes.value[u]);
        marks.push_back(nodes.mark[u]);
        u = nodes.next[u];
    } while (u != sentinel);
    return MarkedCyclicPermutation(CyclicPermutation::with_sentinel(std::move(rotation)),
                                   std::move(marks), cand);
}

DecoratedMotzkinWalk g_map(const MarkedCyclicPermutation& marked) {
    const PinnacleCandidate& cand = marked.candidate();
    const std::int64_t n = cand.n();
    CycleNodes nodes;
    const auto& rot = marked.cycle().rotation();
    std::vector<int> at(n + 2, -1);  // value -> node
    for (std::size_t i = 0; i < rot.size(); ++i) {
        const std::int64_t v = rot[i];
        const int id = nodes.add(v, marked.marks()[i], v == n + 1 || cand.contains(v));
        at[v] = id;
        if (i > 0) {
            nodes.prev[id] = id - 1;
            nodes.next[id - 1] = id;
        }
    }
    nodes.prev[at[rot[0]]] = at[rot.back()];
    nodes.next[at[rot.back()]] = at[rot[0]];
    const int sentinel = at[n + 1];

    std::vector<WalkStep> steps;
    steps.reserve(n);
    for (std::int64_t i = 1; i <= n; ++i) {
        const int u = at[i];
        // Lower boundary of the gap the element sits in.
        int pred = nodes.prev[u];
        while (!nodes.boundary[pred]) pred = nodes.prev[pred];
        nodes.unlink(u);

        const auto bs = nodes.boundaries_from(sentinel);
        int label = -1;
        for (std::size_t s = 0, seen = 0; s < bs.size(); ++s) {
            if (!nodes.gap_available(bs, s)) continue;
            ++seen;
            if (bs[s] == pred) {
                label = static_cast<int>(seen);
                break;
            }
        }
        if (label == -1) throw Error("internal: removed element sat in an unavailable gap");

        StepKind kind = StepKind::flat;
        if (cand.contains(i))
            kind = nodes.mark[u] == Side::left ? StepKind::down : StepKind::up;
        steps.push_back({kind, label, nodes.mark[u]});
    }
    std::reverse(steps.begin(), steps.end());
    return DecoratedMotzkinWalk(std::move(steps), cand);
}

}  // namespace pinnacle
