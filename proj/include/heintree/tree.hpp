#pragma once

#include "heintree/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hein {

// Immutable leaf-labeled tree with positive rational edge weights.
// Node identifiers are dense integers [0, node_count). Leaves carry unique
// text labels; internal nodes are unlabeled. Construction does not validate:
// validate() reports violations so callers can build deliberately-broken
// trees in tests and reject bad parses with precise messages.
class WeightedTree {
public:
    struct Edge {
        int u = -1;
        int v = -1;
        Rational weight{};
    };

    WeightedTree() = default;

    static WeightedTree from_edges(int node_count,
                                   const std::vector<Edge>& edges,
                                   const std::map<int, std::string>& leaf_labels,
                                   std::optional<int> root_hint = std::nullopt);

    int node_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::pair<int, Rational>>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool is_leaf(int v) const { return degree(v) <= 1; }

    bool has_label(int v) const { return !labels_.at(v).empty(); }
    const std::string& label_of(int v) const { return labels_.at(v); }
    std::optional<int> node_of(std::string_view label) const;

    std::vector<int> leaf_nodes() const;            // ascending node id
    std::vector<std::string> labels_sorted() const; // ascending byte order
    int leaf_count() const;

    // Generators may designate a root (rooted complexity measurements use it).
    // Unrooted consumers ignore it; it does not survive serialization.
    std::optional<int> root_hint() const { return root_hint_; }

    // Unique tree path between any two nodes. Throws std::invalid_argument if
    // either endpoint is out of range or the nodes are disconnected.
    Rational path_distance(int a, int b) const;
    std::vector<int> path_nodes(int a, int b) const; // inclusive endpoints

private:
    std::vector<std::vector<std::pair<int, Rational>>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_; // "" = unlabeled
    std::map<std::string, int, std::less<>> label_to_node_;
    std::optional<int> root_hint_;
};

enum class ViolationKind {
    Disconnected,
    EdgeCountMismatch, // |E| != |V| - 1 (cycle or forest)
    NonpositiveWeight,
    InternalDegree2,
    UnlabeledLeaf,
    DuplicateLabel,
    LabeledInternal,
    BadLabel, // label contains characters the serialization grammar forbids
};

struct Violation {
    ViolationKind kind;
    std::string detail; // names the offending node / edge / label
};

// Checks every invariant of a valid instance: connected, acyclic, strictly
// positive weights, no internal node of degree 2 (a designated root is
// exempt: rooted generator outputs legitimately have a binary root), every
// leaf labeled exactly once, labels unique and serializable, internal nodes
// unlabeled. Returns the empty vector iff all invariants hold.
std::vector<Violation> validate(const WeightedTree& t);

// Distance between two leaves addressed by label. Throws on unknown labels.
Rational leaf_distance(const WeightedTree& t, std::string_view a, std::string_view b);

// Splices out every unlabeled degree-2 node, merging its two incident edges
// (weights add). Labeled nodes are never removed. Node ids are re-packed.
WeightedTree suppress_degree2(const WeightedTree& t);

// Same label set and identical exact leaf-to-leaf distance matrices.
bool trees_equivalent(const WeightedTree& a, const WeightedTree& b);

// Smallest leaf label (byte order) reachable from `start` without crossing
// into `banned` (pass -1 for no restriction). Used for deterministic child
// ordering in both the serializer and the inference descent.
const std::string& min_leaf_label_via(const WeightedTree& t, int start, int banned);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t offset);
    std::size_t offset; // byte offset into the input text
};

// Text format. Trees with >= 3 leaves use a Newick-style grammar:
//   subtree := "(" branch ("," branch)+ ")"
//   branch  := (subtree | label) ":" weight
//   tree    := subtree ";"
// with weights as "3", "2.5" or "7/2" and the root unlabeled. The input is
// re-read as unrooted: degree-2 nodes introduced by the rooting are spliced
// out. Two-leaf trees use the dedicated line "EDGE x y 5". parse_tree throws
// ParseError for syntax errors (with byte offset) and for inputs whose
// unrooted form violates the tree invariants (including < 3 leaves in the
// Newick form).
WeightedTree parse_tree(std::string_view text);

// Deterministic inverse: rooted at the internal node adjacent to the
// smallest leaf label, children ordered by smallest contained leaf label,
// weights in canonical rational form, trailing newline. Requires a tree that
// validates cleanly with no degree-2 nodes at all; two leaves emit the EDGE
// form; single-leaf trees are not serializable.
std::string serialize_tree(const WeightedTree& t);

} // namespace hein
