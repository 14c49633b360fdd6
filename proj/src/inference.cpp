#include "heintree/inference.hpp"

#include "heintree/complexity.hpp"

#include <algorithm>
#include <utility>

namespace hein {

Rational sigma(const Rational& dxy, const Rational& dxz, const Rational& dyz) {
    Rational s = (dxy + dxz - dyz) / 2;
    if (s < Rational(0) || s > dxy || s > dxz)
        throw OracleInconsistency("anchor position violates the triangle inequalities");
    return s;
}

// ---------------------------------------------------------------------------
// PartialTree
// ---------------------------------------------------------------------------

PartialTree::PartialTree(const std::string& label_a, const std::string& label_b,
                         const Rational& d_ab) {
    if (label_a == label_b) throw std::invalid_argument("initial labels must differ");
    if (d_ab <= Rational(0)) throw std::invalid_argument("initial distance must be positive");
    add_node(label_a);
    add_node(label_b);
    adj_[0].emplace_back(1, d_ab);
    adj_[1].emplace_back(0, d_ab);
}

int PartialTree::add_node(const std::string& label) {
    int id = node_count();
    adj_.emplace_back();
    labels_.push_back(label);
    if (!label.empty()) {
        auto [it, fresh] = label_to_node_.emplace(label, id);
        (void)it;
        if (!fresh) throw std::invalid_argument("duplicate leaf label '" + label + "'");
    }
    return id;
}

std::optional<int> PartialTree::node_of(std::string_view label) const {
    auto it = label_to_node_.find(label);
    if (it == label_to_node_.end()) return std::nullopt;
    return it->second;
}

int PartialTree::split_edge(int u, int v, const Rational& offset_from_u) {
    if (u < 0 || u >= node_count() || v < 0 || v >= node_count())
        throw std::invalid_argument("split_edge: node out of range");
    auto find_entry = [&](int from, int to) -> std::pair<int, Rational>* {
        for (auto& entry : adj_[from])
            if (entry.first == to) return &entry;
        return nullptr;
    };
    auto* eu = find_entry(u, v);
    auto* ev = find_entry(v, u);
    if (!eu || !ev) throw std::invalid_argument("split_edge: no such edge");
    const Rational w = eu->second;
    if (offset_from_u <= Rational(0) || offset_from_u >= w)
        throw std::invalid_argument("split_edge: offset must fall strictly inside the edge");
    int mid = add_node("");
    eu->first = mid;
    eu->second = offset_from_u;
    ev->first = mid;
    ev->second = w - offset_from_u;
    adj_[mid].emplace_back(u, offset_from_u);
    adj_[mid].emplace_back(v, w - offset_from_u);
    return mid;
}

int PartialTree::attach_leaf(int at_node, const std::string& label, const Rational& weight) {
    if (at_node < 0 || at_node >= node_count())
        throw std::invalid_argument("attach_leaf: node out of range");
    if (label.empty()) throw std::invalid_argument("attach_leaf: empty label");
    if (weight <= Rational(0)) throw std::invalid_argument("attach_leaf: weight must be positive");
    int id = add_node(label);
    adj_[at_node].emplace_back(id, weight);
    adj_[id].emplace_back(at_node, weight);
    return id;
}

WeightedTree PartialTree::freeze() const {
    std::vector<WeightedTree::Edge> edges;
    std::map<int, std::string> leaf_labels;
    for (int u = 0; u < node_count(); ++u) {
        for (const auto& [to, w] : adj_[u])
            if (u < to) edges.push_back({u, to, w});
        if (!labels_[u].empty()) leaf_labels.emplace(u, labels_[u]);
    }
    return WeightedTree::from_edges(node_count(), edges, leaf_labels);
}

// ---------------------------------------------------------------------------
// Traversal helpers over the mutable tree.
// ---------------------------------------------------------------------------

namespace {

struct PathInfo {
    std::vector<int> nodes;    // a .. b inclusive
    std::vector<Rational> pos; // cumulative distance from a, pos[0] = 0
};

PathInfo path_info(const PartialTree& t, int a, int b) {
    std::vector<int> parent(static_cast<std::size_t>(t.node_count()), -2);
    std::vector<int> stack{a};
    parent[static_cast<std::size_t>(a)] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == b) break;
        for (const auto& [to, w] : t.neighbors(v)) {
            (void)w;
            if (parent[static_cast<std::size_t>(to)] == -2) {
                parent[static_cast<std::size_t>(to)] = v;
                stack.push_back(to);
            }
        }
    }
    if (parent[static_cast<std::size_t>(b)] == -2)
        throw std::invalid_argument("path_info: nodes are not connected");
    PathInfo info;
    for (int v = b; v != -1; v = parent[static_cast<std::size_t>(v)]) info.nodes.push_back(v);
    std::reverse(info.nodes.begin(), info.nodes.end());
    info.pos.reserve(info.nodes.size());
    info.pos.emplace_back(0);
    for (std::size_t i = 1; i < info.nodes.size(); ++i) {
        for (const auto& [to, w] : t.neighbors(info.nodes[i - 1]))
            if (to == info.nodes[i]) {
                info.pos.push_back(info.pos.back() + w);
                break;
            }
    }
    return info;
}

// per_node[v] = f of the subtree hanging at v oriented away from `root`'s
// parent side; -1 for nodes cut off by `banned`. Same recurrence as the
// rooted complexity kernel, evaluated on the mutable adjacency.
std::vector<int> eval_f_away(const PartialTree& t, int root, int banned) {
    std::vector<int> per_node(static_cast<std::size_t>(t.node_count()), -1);
    struct Frame {
        int node, parent;
    };
    std::vector<Frame> order;
    order.push_back({root, banned});
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [v, p] = order[i];
        for (const auto& [to, w] : t.neighbors(v)) {
            (void)w;
            if (to != p) order.push_back({to, v});
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto [v, p] = *it;
        std::vector<int> child_f;
        for (const auto& [to, w] : t.neighbors(v)) {
            (void)w;
            if (to != p) child_f.push_back(per_node[static_cast<std::size_t>(to)]);
        }
        std::sort(child_f.begin(), child_f.end(), std::greater<>());
        int f = 0;
        for (std::size_t i = 0; i < child_f.size(); ++i)
            f = std::max(f, child_f[i] + static_cast<int>(i));
        per_node[static_cast<std::size_t>(v)] = f;
    }
    return per_node;
}

const std::string& min_label_via_partial(const PartialTree& t, int start, int banned) {
    const std::string* best = nullptr;
    std::vector<std::pair<int, int>> stack{{start, banned}};
    while (!stack.empty()) {
        auto [v, p] = stack.back();
        stack.pop_back();
        const std::string& lab = t.label_of(v);
        if (!lab.empty() && (!best || lab < *best)) best = &lab;
        for (const auto& [to, w] : t.neighbors(v)) {
            (void)w;
            if (to != p) stack.emplace_back(to, v);
        }
    }
    if (!best) throw std::logic_error("subtree without a labeled leaf");
    return *best;
}

} // namespace

AnchorResult classify_anchor(const PartialTree& t, const std::string& x, const std::string& y,
                             const Rational& sigma_value, int search_from,
                             std::optional<int> search_to) {
    auto nx = t.node_of(x);
    auto ny = t.node_of(y);
    if (!nx || !ny || *nx == *ny) throw std::invalid_argument("classify_anchor: bad endpoints");
    PathInfo path = path_info(t, *nx, *ny);
    const int to_node = search_to.value_or(*ny);
    int i_from = -1, i_to = -1;
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
        if (path.nodes[i] == search_from) i_from = static_cast<int>(i);
        if (path.nodes[i] == to_node) i_to = static_cast<int>(i);
    }
    if (i_from < 0 || i_to < 0 || i_from > i_to)
        throw std::invalid_argument("classify_anchor: window nodes not on the path in order");

    AnchorResult result;
    result.dist_from_x = sigma_value;
    if (sigma_value < path.pos[static_cast<std::size_t>(i_from)] || sigma_value > path.pos.back())
        throw OracleInconsistency("anchor position fell outside the search window");
    if (sigma_value > path.pos[static_cast<std::size_t>(i_to)]) {
        result.kind = AnchorResult::Kind::Beyond;
        return result;
    }
    for (int i = i_from; i <= i_to; ++i) {
        if (path.pos[static_cast<std::size_t>(i)] == sigma_value) {
            result.kind = AnchorResult::Kind::AtNode;
            result.node = path.nodes[static_cast<std::size_t>(i)];
            return result;
        }
        if (i < i_to && sigma_value < path.pos[static_cast<std::size_t>(i) + 1]) {
            result.kind = AnchorResult::Kind::InsideEdge;
            result.edge = {path.nodes[static_cast<std::size_t>(i)],
                           path.nodes[static_cast<std::size_t>(i) + 1]};
            result.offset_from_near_end = sigma_value - path.pos[static_cast<std::size_t>(i)];
            return result;
        }
    }
    throw std::logic_error("classify_anchor: position fell through the window scan");
}

EdgeRootChoice choose_edge_root(const PartialTree& t) {
    UnrootedComplexity uc = unrooted_complexity_serial(t.freeze());
    return {uc.argmin_edge, uc.value};
}

std::string representative_leaf(const PartialTree& t, int subtree_root, int banned_neighbor) {
    std::vector<int> f = eval_f_away(t, subtree_root, banned_neighbor);
    int v = subtree_root, p = banned_neighbor;
    while (t.label_of(v).empty()) {
        int best = -1;
        int best_f = -1;
        const std::string* best_label = nullptr;
        for (const auto& [c, w] : t.neighbors(v)) {
            (void)w;
            if (c == p) continue;
            int fc = f[static_cast<std::size_t>(c)];
            if (fc < best_f) continue;
            if (fc > best_f) {
                best = c;
                best_f = fc;
                best_label = nullptr; // resolve lazily, ties are the rare case
                continue;
            }
            if (!best_label) best_label = &min_label_via_partial(t, best, v);
            const std::string& cl = min_label_via_partial(t, c, v);
            if (cl < *best_label) {
                best = c;
                best_label = &cl;
            }
        }
        if (best < 0) throw std::logic_error("representative descent hit a dead end");
        p = v;
        v = best;
    }
    return t.label_of(v);
}

// ---------------------------------------------------------------------------
// Insertion. Query accounting, which the per-edge complexity bounds exactly:
// the first anchor costs the two queries d(x,z), d(y,z); every further anchor
// re-uses x, so it costs only d(y',z). Total = 1 + #anchors. Descent always
// sits at a node whose parent direction and heaviest child are already
// eliminated — the far probe is routed through maximum-complexity children,
// so wherever the anchor lands on its path, the eliminated child is that
// node's f_1. Probing the rest in non-increasing f order makes the remaining
// worst case at w exactly the f recurrence: eliminating children f_2..f_i
// costs i-1 anchors, and entering child i costs those i-1 plus at most f_i
// more (induction), so #anchors <= 1 + f(side) and the insertion fits within
// max{f(T_u), f(T_v)} + 2 queries.
// ---------------------------------------------------------------------------

InsertResult insert_leaf(PartialTree& t, const std::string& z, DistanceOracle& oracle) {
    if (t.node_of(z)) throw std::invalid_argument("label '" + z + "' is already in the tree");
    const long long count_before = oracle.query_count();

    const EdgeRootChoice choice = choose_edge_root(t);
    const auto [eu, ev] = choice.edge;

    const std::string x = representative_leaf(t, eu, ev);
    const std::string y = representative_leaf(t, ev, eu);
    const int nx = *t.node_of(x);
    const int ny = *t.node_of(y);

    const Rational dxz = oracle.query(x, z);
    const Rational dyz = oracle.query(y, z);
    const Rational dxy = path_info(t, nx, ny).pos.back();
    const Rational s = sigma(dxy, dxz, dyz);

    auto finish = [&]() -> InsertResult {
        return {oracle.query_count() - count_before, choice.complexity};
    };
    auto attach_inside = [&](const AnchorResult& r) {
        const Rational pendant = dxz - r.dist_from_x;
        if (pendant <= Rational(0))
            throw OracleInconsistency("pendant edge for '" + z + "' would not have positive length");
        int mid = t.split_edge(r.edge.first, r.edge.second, r.offset_from_near_end);
        t.attach_leaf(mid, z, pendant);
    };

    AnchorResult first = classify_anchor(t, x, y, s, nx);
    if (first.kind == AnchorResult::Kind::InsideEdge) {
        attach_inside(first);
        return finish();
    }
    if (first.node == nx || first.node == ny)
        throw OracleInconsistency("anchor for '" + z + "' landed on a leaf");

    // Descent state: anchor known to project exactly onto `w`; the neighbor
    // toward x and the neighbor toward the far probe are eliminated.
    int w = first.node;
    Rational pos_w;
    int ban_parent = -1, ban_routed = -1;
    {
        PathInfo path = path_info(t, nx, ny);
        for (std::size_t i = 0; i < path.nodes.size(); ++i)
            if (path.nodes[i] == w) {
                ban_parent = path.nodes[i - 1];
                ban_routed = path.nodes[i + 1];
                pos_w = path.pos[i];
                break;
            }
    }

    for (;;) {
        struct Candidate {
            int child;
            int f;
            const std::string* min_label;
        };
        std::vector<int> f_below = eval_f_away(t, w, ban_parent);
        std::vector<Candidate> candidates;
        for (const auto& [c, cw] : t.neighbors(w)) {
            (void)cw;
            if (c == ban_parent || c == ban_routed) continue;
            candidates.push_back({c, f_below[static_cast<std::size_t>(c)],
                                  &min_label_via_partial(t, c, w)});
        }
        std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
            if (a.f != b.f) return a.f > b.f;
            return *a.min_label < *b.min_label;
        });

        bool moved = false;
        for (const Candidate& cand : candidates) {
            const std::string yp = representative_leaf(t, cand.child, w);
            const int nyp = *t.node_of(yp);
            const Rational dypz = oracle.query(yp, z);
            const Rational dxyp = path_info(t, nx, nyp).pos.back();
            const Rational sp = sigma(dxyp, dxz, dypz);
            AnchorResult r = classify_anchor(t, x, yp, sp, w);
            if (r.kind == AnchorResult::Kind::AtNode && r.node == w)
                continue; // z does not branch off through this child
            if (r.kind == AnchorResult::Kind::InsideEdge) {
                attach_inside(r);
                return finish();
            }
            if (r.node == nyp)
                throw OracleInconsistency("anchor for '" + z + "' landed on a leaf");
            // The anchor pinned an internal node strictly past w: move there.
            PathInfo path = path_info(t, nx, nyp);
            for (std::size_t i = 0; i < path.nodes.size(); ++i)
                if (path.nodes[i] == r.node) {
                    ban_parent = path.nodes[i - 1];
                    ban_routed = path.nodes[i + 1];
                    pos_w = path.pos[i];
                    break;
                }
            w = r.node;
            moved = true;
            break;
        }
        if (moved) continue;

        // Every direction eliminated: z is a new child of w itself.
        const Rational pendant = dxz - pos_w;
        if (pendant <= Rational(0))
            throw OracleInconsistency("pendant edge for '" + z + "' would not have positive length");
        t.attach_leaf(w, z, pendant);
        return finish();
    }
}

std::pair<WeightedTree, QueryReport> infer_tree(const std::vector<std::string>& labels,
                                                DistanceOracle& oracle) {
    if (labels.size() < 2) throw std::invalid_argument("need at least two labels to reconstruct");
    QueryReport report;
    const long long count_seed = oracle.query_count();
    const Rational d01 = oracle.query(labels[0], labels[1]);
    if (d01 <= Rational(0))
        throw OracleInconsistency("distinct leaves reported at non-positive distance");
    report.initial_queries = oracle.query_count() - count_seed;
    PartialTree t(labels[0], labels[1], d01);
    for (std::size_t i = 2; i < labels.size(); ++i) {
        InsertResult r = insert_leaf(t, labels[i], oracle);
        report.per_insertion.push_back(r.queries_used);
    }
    return {t.freeze(), report};
}

} // namespace hein
