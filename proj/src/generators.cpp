#include "heintree/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hein {

std::uint32_t Mcg64::next() {
    state_ *= 6364136223846793005ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
}

std::uint64_t Mcg64::pick(std::uint64_t bound) {
    return (static_cast<std::uint64_t>(next()) * bound) >> 32;
}

WeightMode WeightMode::random_rational(std::uint64_t seed, long long range) {
    if (range < 1) throw std::invalid_argument("weight range must be >= 1");
    WeightMode w;
    w.kind = Kind::RandomRational;
    w.seed = seed;
    w.range = range;
    return w;
}

namespace {

// Accumulates nodes and edges in construction order; weights are drawn in a
// single pass at the end so that shape choices and weight draws never share
// a random stream.
struct Builder {
    int next_node = 0;
    int leaf_counter = 0;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::string> labels;

    int new_internal() { return next_node++; }
    int new_leaf() {
        int id = next_node++;
        labels.emplace(id, "L" + std::to_string(++leaf_counter));
        return id;
    }
    void link(int u, int v) { edges.emplace_back(u, v); }

    WeightedTree finish(const WeightMode& w, std::optional<int> root_hint) const {
        std::vector<WeightedTree::Edge> weighted;
        weighted.reserve(edges.size());
        if (w.kind == WeightMode::Kind::Unit) {
            for (auto [u, v] : edges) weighted.push_back({u, v, Rational(1)});
        } else {
            Mcg64 rng(w.seed);
            for (auto [u, v] : edges) {
                long long p = 1 + static_cast<long long>(rng.pick(static_cast<std::uint64_t>(w.range)));
                long long q = 1 + static_cast<long long>(rng.pick(8));
                weighted.push_back({u, v, Rational(p, q)});
            }
        }
        return WeightedTree::from_edges(next_node, weighted, labels, root_hint);
    }
};

} // namespace

WeightedTree make_filled(const LayerDegreeSequence& seq, const WeightMode& w) {
    if (!seq.valid()) throw std::invalid_argument("layer-degree sequence needs entries >= 2");
    Builder b;
    std::vector<int> layer{b.new_internal()};
    for (std::size_t depth = 0; depth < seq.q.size(); ++depth) {
        const bool last = depth + 1 == seq.q.size();
        std::vector<int> next_layer;
        for (int parent : layer) {
            for (int i = 0; i < seq.q[depth]; ++i) {
                int child = last ? b.new_leaf() : b.new_internal();
                b.link(parent, child);
                next_layer.push_back(child);
            }
        }
        layer = std::move(next_layer);
    }
    return b.finish(w, 0);
}

WeightedTree make_caterpillar(int n, const WeightMode& w) {
    if (n < 2) throw std::invalid_argument("caterpillar needs n >= 2");
    Builder b;
    if (n == 2) {
        int a = b.new_leaf(), c = b.new_leaf();
        b.link(a, c);
        return b.finish(w, std::nullopt);
    }
    if (n == 3) {
        int center = b.new_internal();
        for (int i = 0; i < 3; ++i) b.link(center, b.new_leaf());
        return b.finish(w, std::nullopt);
    }
    const int spine = n - 2;
    for (int i = 0; i < spine; ++i) b.new_internal();
    for (int i = 0; i + 1 < spine; ++i) b.link(i, i + 1);
    b.link(0, b.new_leaf());                          // one end leaf
    for (int i = 0; i < spine; ++i) b.link(i, b.new_leaf()); // one pendant per spine node
    b.link(spine - 1, b.new_leaf());                  // the other end leaf
    return b.finish(w, std::nullopt);
}

namespace {

int build_beanstalk(const GrowthSpec& g, long long m, Builder& b) {
    if (m == 1) return b.new_leaf();
    int v = b.new_internal();
    // Largest admissible smaller side: s <= m - s and s <= g(m - s). s = 1 is
    // always admissible because g is clamped at 1, so the scan terminates.
    long long s = m / 2;
    while (s > 1 && Rational(s) > g_eval(g, m - s)) --s;
    int small = build_beanstalk(g, s, b);
    b.link(v, small);
    int large = build_beanstalk(g, m - s, b);
    b.link(v, large);
    return v;
}

} // namespace

WeightedTree make_beanstalk(const GrowthSpec& g, int n, const WeightMode& w) {
    if (n < 1) throw std::invalid_argument("beanstalk needs n >= 1");
    Builder b;
    build_beanstalk(g, n, b);
    WeightedTree t = b.finish(w, 0);
    beanstalk_audit(t, g);
    return t;
}

WeightedTree make_random(int n, int k, std::uint64_t seed, const WeightMode& w) {
    if (n < 2 || k < 3) throw std::invalid_argument("random tree needs n >= 2 and k >= 3");
    Builder b;
    b.link(b.new_leaf(), b.new_leaf());
    std::vector<bool> internal{false, false};
    std::vector<int> degree{1, 1};
    Mcg64 rng(seed);
    for (int leaf = 3; leaf <= n; ++leaf) {
        std::vector<int> open_nodes;
        for (int v = 0; v < b.next_node; ++v)
            if (internal[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] < k)
                open_nodes.push_back(v);
        const std::size_t sites = b.edges.size() + open_nodes.size();
        const std::size_t site = static_cast<std::size_t>(rng.pick(sites));

        int attach_at;
        if (site < b.edges.size()) {
            auto [u, v] = b.edges[site];
            b.edges.erase(b.edges.begin() + static_cast<std::ptrdiff_t>(site));
            int mid = b.new_internal();
            internal.push_back(true);
            degree.push_back(2);
            b.link(u, mid);
            b.link(mid, v);
            attach_at = mid;
        } else {
            attach_at = open_nodes[site - b.edges.size()];
        }
        int z = b.new_leaf();
        internal.push_back(false);
        degree.push_back(1);
        b.link(attach_at, z);
        ++degree[static_cast<std::size_t>(attach_at)];
    }
    return b.finish(w, std::nullopt);
}

WeightedTree fig2_fixture() {
    Builder b;
    const int B = b.new_internal(); // node 0: the argmin tie-break must pick B-C,
    const int C = b.new_internal(); // node 1: so these two take the smallest ids
    const int A = b.new_internal();
    const int D = b.new_internal();
    const int E = b.new_internal();
    const int F = b.new_internal();
    b.link(A, b.new_leaf()); // L1
    b.link(A, b.new_leaf()); // L2
    b.link(B, A);
    b.link(B, b.new_leaf()); // L3
    b.link(B, b.new_leaf()); // L4
    b.link(B, C);
    b.link(C, D);
    b.link(C, E);
    b.link(D, b.new_leaf()); // L5
    b.link(D, b.new_leaf()); // L6
    b.link(D, b.new_leaf()); // L7
    b.link(E, b.new_leaf()); // L8
    b.link(E, F);
    b.link(F, b.new_leaf()); // L9
    b.link(F, b.new_leaf()); // L10
    return b.finish(WeightMode::unit(), std::nullopt);
}

void beanstalk_audit(const WeightedTree& rooted, const GrowthSpec& g) {
    if (!rooted.root_hint()) throw std::logic_error("beanstalk audit needs a designated root");
    const int root = *rooted.root_hint();
    struct Frame {
        int node, parent;
    };
    std::vector<Frame> order;
    order.push_back({root, -1});
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [v, p] = order[i];
        for (const auto& [to, wt] : rooted.neighbors(v)) {
            (void)wt;
            if (to != p) order.push_back({to, v});
        }
    }
    std::vector<long long> leaves(static_cast<std::size_t>(rooted.node_count()), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto [v, p] = *it;
        std::vector<long long> child_leaves;
        for (const auto& [to, wt] : rooted.neighbors(v)) {
            (void)wt;
            if (to != p) child_leaves.push_back(leaves[static_cast<std::size_t>(to)]);
        }
        if (child_leaves.size() > 2)
            throw std::logic_error("beanstalk audit: node " + std::to_string(v) +
                                   " has more than two children");
        if (child_leaves.empty()) {
            leaves[static_cast<std::size_t>(v)] = 1;
            continue;
        }
        long long total = 0;
        for (long long c : child_leaves) total += c;
        leaves[static_cast<std::size_t>(v)] = total;
        if (child_leaves.size() == 2) {
            const long long ns = std::min(child_leaves[0], child_leaves[1]);
            const long long nl = std::max(child_leaves[0], child_leaves[1]);
            if (Rational(ns) > g_eval(g, nl))
                throw std::logic_error("beanstalk audit: node " + std::to_string(v) +
                                       " splits " + std::to_string(ns) + "/" + std::to_string(nl) +
                                       ", exceeding g");
        }
    }
}

} // namespace hein
