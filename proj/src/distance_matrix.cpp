#include "heintree/distance_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hein {

namespace {

struct LeafIndex {
    std::vector<std::string> labels; // sorted
    std::vector<int> nodes;          // node id per label, same order
};

LeafIndex leaf_index(const WeightedTree& t) {
    LeafIndex idx;
    idx.labels = t.labels_sorted();
    idx.nodes.reserve(idx.labels.size());
    for (const std::string& l : idx.labels) {
        auto node = t.node_of(l);
        if (!node) throw std::invalid_argument("duplicate or missing label '" + l + "'");
        idx.nodes.push_back(*node);
    }
    return idx;
}

// Distances from one source node to every node, a single traversal.
void distances_from(const WeightedTree& t, int source, std::vector<Rational>& out) {
    out.assign(t.node_count(), Rational(-1));
    out[source] = Rational(0);
    std::vector<int> stack{source};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [to, w] : t.neighbors(v)) {
            if (out[to] == Rational(-1)) {
                out[to] = out[v] + w;
                stack.push_back(to);
            }
        }
    }
}

} // namespace

DistanceMatrix distance_matrix(const WeightedTree& t) {
    LeafIndex idx = leaf_index(t);
    const int n = static_cast<int>(idx.labels.size());
    DistanceMatrix m;
    m.labels = idx.labels;
    m.entries.assign(static_cast<std::size_t>(n) * n, Rational(0));

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> dist;
        distances_from(t, idx.nodes[i], dist);
        for (int j = 0; j < n; ++j)
            m.entries[static_cast<std::size_t>(i) * n + j] = dist[idx.nodes[j]];
    }
    return m;
}

DistanceMatrix distance_matrix_serial(const WeightedTree& t) {
    LeafIndex idx = leaf_index(t);
    const int n = static_cast<int>(idx.labels.size());
    DistanceMatrix m;
    m.labels = idx.labels;
    m.entries.assign(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational d = t.path_distance(idx.nodes[i], idx.nodes[j]);
            m.entries[static_cast<std::size_t>(i) * n + j] = d;
            m.entries[static_cast<std::size_t>(j) * n + i] = d;
        }
    return m;
}

std::optional<std::array<std::string, 4>> four_point_violation(const DistanceMatrix& m) {
    const int n = m.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    Rational s1 = m.at(a, b) + m.at(c, d);
                    Rational s2 = m.at(a, c) + m.at(b, d);
                    Rational s3 = m.at(a, d) + m.at(b, c);
                    Rational hi = std::max({s1, s2, s3});
                    int at_max = (s1 == hi) + (s2 == hi) + (s3 == hi);
                    if (at_max < 2)
                        return std::array<std::string, 4>{m.labels[a], m.labels[b], m.labels[c], m.labels[d]};
                }
    return std::nullopt;
}

} // namespace hein
