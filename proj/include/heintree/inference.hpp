#pragma once

#include "heintree/oracle.hpp"
#include "heintree/rational.hpp"
#include "heintree/tree.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hein {

// Raised when oracle answers are inconsistent with any tree extending the
// current partial tree (anchor positions out of range, zero-length pendant
// edges, and similar). Indicates a broken oracle, never a caller error.
struct OracleInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Anchor calculation: the distance from x to the point of the x-y path
// closest to z, computed from the three pairwise distances. Requires all
// three to satisfy the triangle inequalities; throws OracleInconsistency if
// the result falls outside [0, d(x,y)].
Rational sigma(const Rational& dxy, const Rational& dxz, const Rational& dyz);

// Mutable tree being reconstructed. Node ids are dense and stable: nodes are
// never removed, only added (edge splits and pendant attachments), so ids
// assigned during one reconstruction are deterministic given the insertion
// order. freeze() snapshots to a WeightedTree with identical ids.
class PartialTree {
public:
    PartialTree(const std::string& label_a, const std::string& label_b, const Rational& d_ab);

    int node_count() const { return static_cast<int>(adj_.size()); }
    int leaf_count() const { return static_cast<int>(label_to_node_.size()); }
    const std::string& label_of(int v) const { return labels_.at(v); }
    std::optional<int> node_of(std::string_view label) const;
    const std::vector<std::pair<int, Rational>>& neighbors(int v) const { return adj_.at(v); }

    // Splits edge (u,v) at offset_from_u (strictly inside) and returns the
    // new node's id. Throws std::invalid_argument on a non-edge or an offset
    // touching an endpoint.
    int split_edge(int u, int v, const Rational& offset_from_u);

    // Attaches a new labeled leaf to an existing node; returns its id.
    int attach_leaf(int at_node, const std::string& label, const Rational& weight);

    WeightedTree freeze() const;

private:
    std::vector<std::vector<std::pair<int, Rational>>> adj_;
    std::vector<std::string> labels_;
    std::map<std::string, int, std::less<>> label_to_node_;

    int add_node(const std::string& label);
};

// Where an anchor position lands relative to a window of the x->y path.
struct AnchorResult {
    enum class Kind { AtNode, InsideEdge, Beyond };
    Kind kind = Kind::AtNode;
    Rational dist_from_x{};              // the sigma value classified
    int node = -1;                       // AtNode: the path node hit exactly
    std::pair<int, int> edge{-1, -1};    // InsideEdge: (near end, far end)
    Rational offset_from_near_end{};     // InsideEdge: strictly positive
};

// Classifies sigma_value along the x->y path, scanning the window from
// search_from to search_to (both path nodes; search_to defaults to y).
// Positions strictly past search_to classify as Beyond — the caller then
// knows the anchor lies deeper in that direction. Throws OracleInconsistency
// if sigma_value lies outside [position(search_from), d(x,y)] or
// invalid_argument if the window nodes are not on the path in order.
AnchorResult classify_anchor(const PartialTree& t, const std::string& x, const std::string& y,
                             const Rational& sigma_value, int search_from,
                             std::optional<int> search_to = std::nullopt);

// The edge root for the next insertion: the edge minimizing
// f_uv = max{f(T_u), f(T_v)} + 2 over the current partial tree, ties broken
// by lexicographically smallest (min id, max id). `complexity` is the
// minimum itself, i.e. the unrooted complexity of the partial tree — the
// per-insertion query budget.
struct EdgeRootChoice {
    std::pair<int, int> edge{-1, -1};
    int complexity = 0;
};
EdgeRootChoice choose_edge_root(const PartialTree& t);

// Probe leaf for the subtree hanging at subtree_root when banned_neighbor is
// cut away: descend into the child of maximum rooted complexity at every
// step (ties: smallest contained leaf label) until a leaf is reached.
// Routing through the heaviest child is what makes the Eq-(1) accounting
// tight — entering a subtree always eliminates its heaviest child first.
std::string representative_leaf(const PartialTree& t, int subtree_root, int banned_neighbor);

struct InsertResult {
    long long queries_used = 0;      // oracle count delta for this insertion
    int pre_unrooted_complexity = 0; // the budget this insertion had to meet
};

// Hein insertion of one new leaf. Chooses the edge root, anchors z against
// representatives of the two sides (2 queries), then descends: each further
// anchor calculation costs exactly 1 query (d(y', z); d(x, y') is read from
// the partial tree and d(x, z) is remembered). The leaf is attached by an
// edge split or as a new child of an existing node; the partial tree remains
// the exact induced subtree of the hidden tree leaf-set.
InsertResult insert_leaf(PartialTree& t, const std::string& z, DistanceOracle& oracle);

// Full reconstruction over the given insertion order: 1 seed query for the
// first two labels, then insert_leaf per remaining label. Requires >= 2
// distinct labels, all known to the oracle.
std::pair<WeightedTree, QueryReport> infer_tree(const std::vector<std::string>& labels,
                                                DistanceOracle& oracle);

} // namespace hein
