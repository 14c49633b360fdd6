#include "heintree/tree.hpp"

#include "heintree/distance_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hein {

namespace {

bool label_charset_ok(std::string_view label) {
    if (label.empty()) return false;
    for (char c : label) {
        bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
        if (!ok) return false;
    }
    return true;
}

std::string edge_name(int u, int v) {
    return "(" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + ")";
}

} // namespace

WeightedTree WeightedTree::from_edges(int node_count,
                                      const std::vector<Edge>& edges,
                                      const std::map<int, std::string>& leaf_labels,
                                      std::optional<int> root_hint) {
    if (node_count < 1) throw std::invalid_argument("tree needs at least one node");
    WeightedTree t;
    t.adj_.resize(node_count);
    t.labels_.assign(node_count, "");
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count)
            throw std::invalid_argument("edge endpoint out of range: " + edge_name(e.u, e.v));
        if (e.u == e.v) throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
        t.adj_[e.u].emplace_back(e.v, e.weight);
        t.adj_[e.v].emplace_back(e.u, e.weight);
        t.edges_.push_back(e);
    }
    for (const auto& [node, label] : leaf_labels) {
        if (node < 0 || node >= node_count)
            throw std::invalid_argument("labeled node out of range: " + std::to_string(node));
        t.labels_[node] = label;
        t.label_to_node_.emplace(label, node); // duplicates keep the first; validate() reports them
    }
    if (root_hint && (*root_hint < 0 || *root_hint >= node_count))
        throw std::invalid_argument("root hint out of range");
    t.root_hint_ = root_hint;
    return t;
}

std::optional<int> WeightedTree::node_of(std::string_view label) const {
    auto it = label_to_node_.find(label);
    if (it == label_to_node_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> WeightedTree::leaf_nodes() const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

std::vector<std::string> WeightedTree::labels_sorted() const {
    std::vector<std::string> out;
    for (const std::string& l : labels_)
        if (!l.empty()) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

int WeightedTree::leaf_count() const {
    int n = 0;
    for (int v = 0; v < node_count(); ++v)
        if (is_leaf(v)) ++n;
    return n;
}

std::vector<int> WeightedTree::path_nodes(int a, int b) const {
    if (a < 0 || a >= node_count() || b < 0 || b >= node_count())
        throw std::invalid_argument("path endpoint out of range");
    if (a == b) return {a};
    // Iterative DFS recording parents until b is found.
    std::vector<int> parent(node_count(), -2);
    std::vector<int> stack{a};
    parent[a] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == b) break;
        for (const auto& [to, w] : adj_[v]) {
            (void)w;
            if (parent[to] == -2) {
                parent[to] = v;
                stack.push_back(to);
            }
        }
    }
    if (parent[b] == -2) throw std::invalid_argument("nodes are disconnected");
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

Rational WeightedTree::path_distance(int a, int b) const {
    std::vector<int> path = path_nodes(a, b);
    Rational d{0};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        for (const auto& [to, w] : adj_[path[i]]) {
            if (to == path[i + 1]) {
                d += w;
                break;
            }
        }
    }
    return d;
}

std::vector<Violation> validate(const WeightedTree& t) {
    std::vector<Violation> out;
    const int n = t.node_count();

    // Connectivity.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [to, w] : t.neighbors(v)) {
            (void)w;
            if (!seen[to]) {
                seen[to] = 1;
                ++reached;
                stack.push_back(to);
            }
        }
    }
    if (reached != n)
        out.push_back({ViolationKind::Disconnected,
                       std::to_string(n - reached) + " node(s) unreachable from node 0"});
    if (static_cast<int>(t.edges().size()) != n - 1)
        out.push_back({ViolationKind::EdgeCountMismatch,
                       std::to_string(t.edges().size()) + " edges for " + std::to_string(n) + " nodes"});

    for (const auto& e : t.edges())
        if (e.weight <= Rational(0))
            out.push_back({ViolationKind::NonpositiveWeight,
                           "edge " + edge_name(e.u, e.v) + " has weight " + format_rational(e.weight)});

    for (int v = 0; v < n; ++v) {
        bool leaf = t.is_leaf(v);
        if (!leaf && t.degree(v) == 2 && !(t.root_hint() && *t.root_hint() == v))
            out.push_back({ViolationKind::InternalDegree2, "internal node " + std::to_string(v)});
        if (leaf && !t.has_label(v))
            out.push_back({ViolationKind::UnlabeledLeaf, "leaf node " + std::to_string(v)});
        if (!leaf && t.has_label(v))
            out.push_back({ViolationKind::LabeledInternal,
                           "internal node " + std::to_string(v) + " labeled '" + t.label_of(v) + "'"});
        if (t.has_label(v) && !label_charset_ok(t.label_of(v)))
            out.push_back({ViolationKind::BadLabel, "label '" + t.label_of(v) + "' at node " + std::to_string(v)});
    }

    std::map<std::string, int> label_count;
    for (int v = 0; v < n; ++v)
        if (t.has_label(v)) ++label_count[t.label_of(v)];
    for (const auto& [label, count] : label_count)
        if (count > 1)
            out.push_back({ViolationKind::DuplicateLabel,
                           "label '" + label + "' used " + std::to_string(count) + " times"});
    return out;
}

Rational leaf_distance(const WeightedTree& t, std::string_view a, std::string_view b) {
    auto na = t.node_of(a);
    auto nb = t.node_of(b);
    if (!na) throw std::invalid_argument("unknown leaf label '" + std::string(a) + "'");
    if (!nb) throw std::invalid_argument("unknown leaf label '" + std::string(b) + "'");
    return t.path_distance(*na, *nb);
}

WeightedTree suppress_degree2(const WeightedTree& t) {
    const int n = t.node_count();
    // Mutable adjacency copies; splice unlabeled degree-2 nodes one by one.
    std::vector<std::vector<std::pair<int, Rational>>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = t.neighbors(v);
    std::vector<char> dead(n, 0);

    auto drop_neighbor = [&](int from, int gone) {
        auto& lst = adj[from];
        for (std::size_t i = 0; i < lst.size(); ++i)
            if (lst[i].first == gone) {
                lst.erase(lst.begin() + static_cast<long>(i));
                return;
            }
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (dead[v] || t.has_label(v) || adj[v].size() != 2) continue;
            auto [a, wa] = adj[v][0];
            auto [b, wb] = adj[v][1];
            dead[v] = 1;
            drop_neighbor(a, v);
            drop_neighbor(b, v);
            adj[a].emplace_back(b, wa + wb);
            adj[b].emplace_back(a, wa + wb);
            adj[v].clear();
            changed = true;
        }
    }

    // Re-pack ids densely.
    std::vector<int> remap(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!dead[v]) remap[v] = next++;

    std::vector<WeightedTree::Edge> edges;
    for (int v = 0; v < n; ++v) {
        if (dead[v]) continue;
        for (const auto& [to, w] : adj[v])
            if (v < to) edges.push_back({remap[v], remap[to], w});
    }
    std::map<int, std::string> labels;
    for (int v = 0; v < n; ++v)
        if (!dead[v] && t.has_label(v)) labels[remap[v]] = t.label_of(v);

    std::optional<int> hint;
    if (t.root_hint() && !dead[*t.root_hint()]) hint = remap[*t.root_hint()];
    return WeightedTree::from_edges(next, edges, labels, hint);
}

bool trees_equivalent(const WeightedTree& a, const WeightedTree& b) {
    if (a.labels_sorted() != b.labels_sorted()) return false;
    return distance_matrix(a) == distance_matrix(b);
}

const std::string& min_leaf_label_via(const WeightedTree& t, int start, int banned) {
    const std::string* best = nullptr;
    std::vector<int> stack{start};
    std::vector<char> seen(t.node_count(), 0);
    seen[start] = 1;
    if (banned >= 0) seen[banned] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (t.has_label(v) && (!best || t.label_of(v) < *best)) best = &t.label_of(v);
        for (const auto& [to, w] : t.neighbors(v)) {
            (void)w;
            if (!seen[to]) {
                seen[to] = 1;
                stack.push_back(to);
            }
        }
    }
    if (!best) throw std::invalid_argument("subtree holds no labeled leaf");
    return *best;
}

} // namespace hein
