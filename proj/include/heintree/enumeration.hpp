#pragma once

#include "heintree/tree.hpp"

#include <functional>
#include <vector>

namespace hein {

// Explicit rooted shape: unlabeled, unweighted, children canonically
// ordered. Used by the exhaustive cross-check oracles — complexity is
// evaluated directly from the defining recurrence, independent of the
// library's tree machinery.
struct Shape {
    std::vector<Shape> children;

    int leaves() const;
    int complexity() const; // f = max_i (f(child_i) + i - 1), children sorted by f desc
};

// Every rooted shape (up to isomorphism) with between 1 and max_leaves
// leaves in which each internal node has 2..k-1 children. Visits shapes in
// non-decreasing leaf count. Intended for small budgets (<= ~12 leaves).
void enumerate_rooted_shapes(int k, int max_leaves, const std::function<void(const Shape&)>& visit);

// Every unrooted tree shape (up to isomorphism) with 2..max_leaves leaves
// and no degree-2 nodes, materialized with unit weights and labels L1..Lm in
// a deterministic order. Grown by leaf insertion with canonical-form
// deduplication. Counts for max_leaves 2..6: 1, 1, 2, 3, 7.
std::vector<WeightedTree> enumerate_unrooted_trees(int max_leaves);

} // namespace hein
