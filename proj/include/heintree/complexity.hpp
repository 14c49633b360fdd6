#pragma once

#include "heintree/tree.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hein {

// ---------------------------------------------------------------------------
// Insertion complexity of rooted and unrooted trees.
//
// f(T) = 0 for a single node, otherwise max_i (f(T_i) + i - 1) over the child
// subtrees T_1 >= T_2 >= ... ordered by non-increasing f. This is the
// worst-case number of anchor calculations needed to place a new leaf known
// to attach at or below the root, and it is purely topological: weights
// never enter.
// ---------------------------------------------------------------------------

struct RootedComplexity {
    int value = 0;
    std::vector<int> per_node; // f of the subtree hanging at each node, -1 off-tree
};

// Roots the whole tree at `root` (any node, leaves allowed).
RootedComplexity rooted_complexity(const WeightedTree& t, int root);

// f of the subtree at `root` when the neighbor `banned` is cut away
// (banned = -1 evaluates the whole tree). The building block for per-edge
// splits. Thread-safe and allocation-local.
int rooted_complexity_away(const WeightedTree& t, int root, int banned);

struct UnrootedComplexity {
    int value = 0;
    std::pair<int, int> argmin_edge{-1, -1}; // normalized (min id, max id)
    // f_uv = max{f(T_u), f(T_v)} + 2 for every edge, in edges() order.
    std::vector<std::pair<std::pair<int, int>, int>> per_edge;
};

// min over edges uv of f_uv; argmin ties broken by lexicographically
// smallest (min endpoint, max endpoint). Parallel over edges (OpenMP).
UnrootedComplexity unrooted_complexity(const WeightedTree& t);

// Same result, single-threaded; kept as the reference for kernel tests.
UnrootedComplexity unrooted_complexity_serial(const WeightedTree& t);

// ---------------------------------------------------------------------------
// Minimal leaf counts: S(f0) = fewest leaves of any rooted tree with
// complexity f0 when every node has at most k-1 children (max degree k).
// ---------------------------------------------------------------------------

// Recursive characterization: S(0) = 1, S(f0) = f0 + 1 for 0 < f0 < k-1,
// S(f0) = min_{1 < i < k} i * S(f0 - i + 1) for f0 >= k-1. Memoized.
// Throws std::overflow_error if the count exceeds the long long range.
long long min_leaf_count(int k, int f0);

struct MinLeafTable {
    int k = 0;
    std::vector<long long> s; // s[f0] for f0 = 0..max_f0
};
MinLeafTable min_leaf_table(int k, int max_f0);

// Independent oracle: exhaustively enumerates every way to assemble a rooted
// shape with <= leaf_budget leaves (child counts 2..k-1, all leaf splits,
// all achievable child complexities), memoized by leaf count, and returns
// the minimal leaf count among shapes of complexity exactly f0. nullopt if
// no such shape exists within the budget. Uses only the f-recurrence
// definition, never the S recursion above.
std::optional<long long> brute_force_min_leaves(int k, int f0, int leaf_budget);

// ---------------------------------------------------------------------------
// Filled trees: layer-degree sequence (q_1, ..., q_j), every entry >= 2.
// Every depth-i node has q_{i+1} children; leaves all sit at depth j.
// ---------------------------------------------------------------------------

struct LayerDegreeSequence {
    std::vector<int> q;

    static LayerDegreeSequence parse(std::string_view csv); // "3,2"
    bool valid() const; // nonempty, all entries >= 2
    LayerDegreeSequence normalized() const; // sorted non-increasing
};

// (complexity, leaves) = (sum(q_i - 1), prod(q_i)). Order-independent.
std::pair<long long, long long> filled_complexity_and_leaves(const LayerDegreeSequence& seq);

// ---------------------------------------------------------------------------
// The n-leaf upper bound f0 <= (k-2) log_{k-1}(n) + (k-2).
// The right-hand side is irrational in general, so the displayable value is
// its exact integer ceiling and the comparisons are exact integer-power
// predicates (no floating point).
// ---------------------------------------------------------------------------

// ceil((k-2) log_{k-1} n) + (k-2); equals the bound when the log is exact.
long long hein_bound_ceil(long long n, int k);

// f0 <= (k-2) log_{k-1}(n) + (k-2), decided exactly.
bool rooted_bound_holds(long long f0, long long n, int k);

// total <= n ((k-2) log_{k-1}(n) + k), decided exactly. This is the whole-
// reconstruction budget: n insertions, each within the unrooted bound.
bool total_bound_holds(long long total, long long n, int k);

} // namespace hein
