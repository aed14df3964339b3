#include "pinnacle/forest.hpp"

#include <algorithm>

#include "pinnacle/blocks.hpp"

namespace pinnacle {

namespace {

void postorder_labels(const std::vector<Forest::Node>& nodes, int root,
                      std::vector<std::int64_t>& out) {
    const Forest::Node& node = nodes[root];
    if (node.left != -1) {
        postorder_labels(nodes, node.left, out);
        postorder_labels(nodes, node.right, out);
    }
    out.push_back(node.label);
}

}  // namespace

Forest::Forest(std::vector<Node> nodes, std::vector<int> roots)
    : nodes_(std::move(nodes)), roots_(std::move(roots)) {
    const int n = static_cast<int>(nodes_.size());
    std::vector<int> refs(n, 0);
    for (const Node& node : nodes_) {
        if ((node.left == -1) != (node.right == -1))
            throw Error("every node has zero or two children");
        if (node.left != -1) {
            if (node.left < 0 || node.left >= n || node.right < 0 || node.right >= n)
                throw Error("child index out of range");
            ++refs[node.left];
            ++refs[node.right];
        }
    }
    for (int r : roots_) {
        if (r < 0 || r >= n) throw Error("root index out of range");
        ++refs[r];
    }
    for (int c : refs)
        if (c != 1) throw Error("nodes must form disjoint trees covering the arena");

    std::vector<std::int64_t> labels;
    labels.reserve(n);
    for (int r : roots_) postorder_labels(nodes_, r, labels);
    for (int i = 0; i < n; ++i)
        if (labels[i] != i + 1)
            throw Error("labels must read 1..n in left-to-right postorder");

    // Canonical arena layout: index = label - 1.  Makes equality purely
    // structural, independent of how the caller arranged the nodes.
    std::vector<Node> canon(n);
    for (const Node& node : nodes_) {
        canon[node.label - 1] = {
            node.label,
            node.left == -1 ? -1 : static_cast<int>(nodes_[node.left].label) - 1,
            node.right == -1 ? -1 : static_cast<int>(nodes_[node.right].label) - 1};
    }
    for (int& r : roots_) r = static_cast<int>(nodes_[r].label) - 1;
    nodes_ = std::move(canon);
}

bool Forest::tree_is_singleton(std::size_t tree) const {
    if (tree >= roots_.size()) throw Error("tree index out of range");
    return nodes_[roots_[tree]].left == -1;
}

std::vector<std::int64_t> Forest::internal_labels() const {
    std::vector<std::int64_t> out;
    for (const Node& node : nodes_)
        if (node.left != -1) out.push_back(node.label);
    std::sort(out.begin(), out.end());
    return out;
}

Forest Forest::selection(const std::vector<std::size_t>& trees, int extra_singletons) const {
    if (extra_singletons < 0) throw Error("extra singleton count is non-negative");
    std::vector<Node> nodes;
    std::vector<int> roots;
    std::int64_t next_label = 1;
    for (int t = 0; t < extra_singletons; ++t) {
        nodes.push_back({next_label++, -1, -1});
        roots.push_back(static_cast<int>(nodes.size()) - 1);
    }
    // Copies a subtree shape, labeling in postorder as it returns.
    auto copy = [&](auto&& self, int src) -> int {
        const Node& node = nodes_[src];
        int left = -1, right = -1;
        if (node.left != -1) {
            left = self(self, node.left);
            right = self(self, node.right);
        }
        nodes.push_back({next_label++, left, right});
        return static_cast<int>(nodes.size()) - 1;
    };
    for (std::size_t t : trees) {
        if (t >= roots_.size()) throw Error("tree index out of range");
        roots.push_back(copy(copy, roots_[t]));
    }
    return Forest(std::move(nodes), std::move(roots));
}

Forest forest_encode(const PinnacleCandidate& cand) {
    const Admissibility adm = check_admissible(cand);
    if (!adm.admissible) throw Error("candidate is not realizable: " + adm.reason);

    std::vector<Forest::Node> nodes;
    std::vector<int> roots_rightmost_first;
    std::vector<int> unlabeled;  // stack; top is the rightmost
    for (std::int64_t label = cand.n(); label >= 1; --label) {
        int id;
        if (unlabeled.empty()) {
            nodes.push_back({label, -1, -1});
            id = static_cast<int>(nodes.size()) - 1;
            roots_rightmost_first.push_back(id);
        } else {
            id = unlabeled.back();
            unlabeled.pop_back();
            nodes[id].label = label;
        }
        if (cand.contains(label)) {
            nodes.push_back({0, -1, -1});
            nodes[id].left = static_cast<int>(nodes.size()) - 1;
            nodes.push_back({0, -1, -1});
            nodes[id].right = static_cast<int>(nodes.size()) - 1;
            unlabeled.push_back(nodes[id].left);
            unlabeled.push_back(nodes[id].right);
        }
    }
    if (!unlabeled.empty()) throw Error("internal: unlabeled nodes left after encoding");
    std::vector<int> roots(roots_rightmost_first.rbegin(), roots_rightmost_first.rend());
    return Forest(std::move(nodes), std::move(roots));
}

PinnacleCandidate forest_decode(const Forest& forest) {
    return PinnacleCandidate(forest.internal_labels(), forest.node_count());
}

HalfProduct half_product_check(const Forest& forest, const ArithMode& mode) {
    if (forest.tree_count() < 2) throw Error("the split needs at least two trees");
    if (!forest.tree_is_singleton(0)) throw Error("the split needs a leading singleton tree");

    HalfProduct out{fast_count(forest_decode(forest), mode), Count::of(mode, 0), false};

    const Forest head = forest.selection({0, 1}, 0);
    std::vector<std::size_t> rest{0};
    for (std::size_t t = 2; t < forest.tree_count(); ++t) rest.push_back(t);
    const Forest tail = forest.selection(rest, 1);

    const Count product =
        fast_count(forest_decode(head), mode) * fast_count(forest_decode(tail), mode);
    out.split = product.div_exact(Count::of(mode, 2));
    out.equal = out.whole == out.split;
    return out;
}

}  // namespace pinnacle
