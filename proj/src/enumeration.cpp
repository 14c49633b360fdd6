#include "heintree/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace hein {

int Shape::leaves() const {
    if (children.empty()) return 1;
    int total = 0;
    for (const Shape& c : children) total += c.leaves();
    return total;
}

int Shape::complexity() const {
    if (children.empty()) return 0;
    std::vector<int> child_f;
    child_f.reserve(children.size());
    for (const Shape& c : children) child_f.push_back(c.complexity());
    std::sort(child_f.begin(), child_f.end(), std::greater<>());
    int f = 0;
    for (std::size_t i = 0; i < child_f.size(); ++i)
        f = std::max(f, child_f[i] + static_cast<int>(i));
    return f;
}

void enumerate_rooted_shapes(int k, int max_leaves,
                             const std::function<void(const Shape&)>& visit) {
    if (k < 3) throw std::invalid_argument("degree bound k must be >= 3");
    if (max_leaves < 1) return;

    // Universe of all shapes with fewer leaves, ordered by leaf count then
    // generation order. A shape's children are a non-increasing sequence of
    // universe indices, which makes every child multiset appear exactly once.
    std::vector<Shape> universe;
    std::vector<int> universe_leaves;

    for (int m = 1; m <= max_leaves; ++m) {
        std::vector<Shape> batch;
        if (m == 1) {
            batch.emplace_back();
        } else {
            std::vector<int> chosen;
            auto rec = [&](auto&& self, int max_index, int remaining, int count) -> void {
                if (remaining == 0) {
                    if (count >= 2) {
                        Shape s;
                        s.children.reserve(chosen.size());
                        for (int idx : chosen) s.children.push_back(universe[static_cast<std::size_t>(idx)]);
                        batch.push_back(std::move(s));
                    }
                    return;
                }
                if (count == k - 1) return;
                for (int idx = max_index; idx >= 0; --idx) {
                    const int l = universe_leaves[static_cast<std::size_t>(idx)];
                    if (l > remaining) continue;
                    // children still to pick each have 1..l leaves
                    if (remaining - l > (k - 2 - count) * l) continue;
                    chosen.push_back(idx);
                    self(self, idx, remaining - l, count + 1);
                    chosen.pop_back();
                }
            };
            rec(rec, static_cast<int>(universe.size()) - 1, m, 0);
        }
        for (Shape& s : batch) {
            visit(s);
            universe_leaves.push_back(m);
            universe.push_back(std::move(s));
        }
    }
}

namespace {

// Unlabeled free tree under construction: adjacency only, unit semantics.
struct FreeTree {
    std::vector<std::vector<int>> adj;

    int node_count() const { return static_cast<int>(adj.size()); }
    int add_node() {
        adj.emplace_back();
        return node_count() - 1;
    }
    void link(int u, int v) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
};

std::string ahu_encode(const FreeTree& t, int v, int parent) {
    std::vector<std::string> parts;
    for (int to : t.adj[static_cast<std::size_t>(v)])
        if (to != parent) parts.push_back(ahu_encode(t, to, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const std::string& p : parts) out += p;
    out += ")";
    return out;
}

// Canonical string of a free tree: AHU encoding rooted at the tree center
// (at the center edge when there are two centers).
std::string canonical_form(const FreeTree& t) {
    const int n = t.node_count();
    if (n == 1) return "()";
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(t.adj[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] <= 1) frontier.push_back(v);
    }
    int remaining = n;
    std::vector<int> centers = frontier;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(frontier.size());
        for (int v : frontier)
            for (int to : t.adj[static_cast<std::size_t>(v)])
                if (--degree[static_cast<std::size_t>(to)] == 1) next.push_back(to);
        frontier = std::move(next);
        centers = frontier;
    }
    if (centers.size() == 1) return ahu_encode(t, centers[0], -1);
    std::string a = ahu_encode(t, centers[0], centers[1]);
    std::string b = ahu_encode(t, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + "|" + b + "]";
}

WeightedTree materialize(const FreeTree& t) {
    std::vector<WeightedTree::Edge> edges;
    std::map<int, std::string> labels;
    int leaf_counter = 0;
    for (int u = 0; u < t.node_count(); ++u) {
        for (int v : t.adj[static_cast<std::size_t>(u)])
            if (u < v) edges.push_back({u, v, Rational(1)});
        if (t.adj[static_cast<std::size_t>(u)].size() == 1)
            labels.emplace(u, "L" + std::to_string(++leaf_counter));
    }
    return WeightedTree::from_edges(t.node_count(), edges, labels);
}

} // namespace

std::vector<WeightedTree> enumerate_unrooted_trees(int max_leaves) {
    std::vector<WeightedTree> out;
    if (max_leaves < 2) return out;

    FreeTree seed;
    seed.add_node();
    seed.add_node();
    seed.link(0, 1);
    std::map<std::string, FreeTree> current{{canonical_form(seed), seed}};

    for (int m = 2; m <= max_leaves; ++m) {
        for (const auto& [canon, t] : current) {
            (void)canon;
            out.push_back(materialize(t));
        }
        if (m == max_leaves) break;

        std::map<std::string, FreeTree> next;
        for (const auto& [canon, t] : current) {
            (void)canon;
            // Split every edge u-v (u < v) and hang the new leaf off the split.
            for (int u = 0; u < t.node_count(); ++u) {
                for (int v : t.adj[static_cast<std::size_t>(u)]) {
                    if (u >= v) continue;
                    FreeTree grown = t;
                    int mid = grown.add_node();
                    int leaf = grown.add_node();
                    auto& au = grown.adj[static_cast<std::size_t>(u)];
                    auto& av = grown.adj[static_cast<std::size_t>(v)];
                    *std::find(au.begin(), au.end(), v) = mid;
                    *std::find(av.begin(), av.end(), u) = mid;
                    grown.adj[static_cast<std::size_t>(mid)] = {u, v, leaf};
                    grown.adj[static_cast<std::size_t>(leaf)] = {mid};
                    next.emplace(canonical_form(grown), std::move(grown));
                }
            }
            // Attach the new leaf to every internal node.
            for (int v = 0; v < t.node_count(); ++v) {
                if (t.adj[static_cast<std::size_t>(v)].size() < 3) continue;
                FreeTree grown = t;
                int leaf = grown.add_node();
                grown.link(v, leaf);
                next.emplace(canonical_form(grown), std::move(grown));
            }
        }
        current = std::move(next);
    }
    return out;
}

} // namespace hein
