#pragma once

#include <cstdint>
#include <vector>

#include "pinnacle/count.hpp"
#include "pinnacle/perm.hpp"

namespace pinnacle {

// An ordered sequence of labeled complete binary trees (every node has
// zero or two children).  Labels are a permutation of 1..n reading each
// tree in postorder, trees left to right.
class Forest {
public:
    struct Node {
        std::int64_t label;
        int left = -1;   // arena index, -1 for leaves
        int right = -1;

        bool operator==(const Node&) const noexcept = default;
    };

    Forest() = default;  // empty forest
    Forest(std::vector<Node> nodes, std::vector<int> roots);

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const std::vector<int>& roots() const noexcept { return roots_; }
    std::int64_t node_count() const noexcept { return static_cast<std::int64_t>(nodes_.size()); }
    std::size_t tree_count() const noexcept { return roots_.size(); }
    bool tree_is_singleton(std::size_t tree) const;

    std::vector<std::int64_t> internal_labels() const;  // ascending

    // New forest made of extra leading singleton trees followed by the
    // chosen trees' shapes, relabeled 1..N in postorder.
    Forest selection(const std::vector<std::size_t>& trees, int extra_singletons) const;

    bool operator==(const Forest& rhs) const noexcept = default;

private:
    std::vector<Node> nodes_;
    std::vector<int> roots_;
};

// Builds the forest whose internal nodes are exactly the candidate
// members: labels are handed out from n down to 1, each going to the
// rightmost unlabeled node when one exists (members receive two fresh
// children) and to a new leftmost singleton otherwise.  The candidate
// must be admissible.
Forest forest_encode(const PinnacleCandidate& cand);

// Reads the candidate back: members are the internal labels, the ambient
// size is the node count.
PinnacleCandidate forest_decode(const Forest& forest);

struct HalfProduct {
    Count whole;  // count for the full forest
    Count split;  // half of the two-part product
    bool equal;
};

// For a forest (O, T_2, ..., T_r) led by a singleton: compares the full
// arrangement count with half the product of the counts for (O, T_2) and
// (O, O, T_3, ..., T_r).  The product is always even; exact mode checks
// that, modular mode divides by the inverse of two.
HalfProduct half_product_check(const Forest& forest, const ArithMode& mode = ArithMode::exact());

}  // namespace pinnacle
