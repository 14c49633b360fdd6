#include "heintree/complexity.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hein {

namespace {

using boost::multiprecision::cpp_int;

// f from a list of child complexities: sort non-increasing, max(f_i + i - 1).
int combine_children(std::vector<int>& child_f) {
    std::sort(child_f.begin(), child_f.end(), std::greater<>());
    int f = 0;
    for (std::size_t i = 0; i < child_f.size(); ++i)
        f = std::max(f, child_f[i] + static_cast<int>(i));
    return f;
}

// Post-order evaluation without recursion (caterpillar spines get deep).
// Fills per_node[v] for every v in the component of root (minus banned).
void eval_away(const WeightedTree& t, int root, int banned, std::vector<int>& per_node) {
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
            if (to != p) child_f.push_back(per_node[to]);
        }
        per_node[v] = combine_children(child_f);
    }
}

cpp_int ipow(cpp_int base, long long exp) {
    cpp_int r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

} // namespace

RootedComplexity rooted_complexity(const WeightedTree& t, int root) {
    if (root < 0 || root >= t.node_count()) throw std::invalid_argument("root out of range");
    RootedComplexity rc;
    rc.per_node.assign(t.node_count(), -1);
    eval_away(t, root, -1, rc.per_node);
    rc.value = rc.per_node[root];
    return rc;
}

int rooted_complexity_away(const WeightedTree& t, int root, int banned) {
    std::vector<int> per_node(t.node_count(), -1);
    eval_away(t, root, banned, per_node);
    return per_node[root];
}

namespace {

UnrootedComplexity unrooted_complexity_impl(const WeightedTree& t, bool parallel) {
    if (t.leaf_count() < 2) throw std::invalid_argument("unrooted complexity needs >= 2 leaves");
    const auto& edges = t.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<std::pair<std::pair<int, int>, int>> per_edge(m);

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < m; ++i) {
        int u = edges[i].u, v = edges[i].v;
        int fu = rooted_complexity_away(t, u, v);
        int fv = rooted_complexity_away(t, v, u);
        per_edge[i] = {{std::min(u, v), std::max(u, v)}, std::max(fu, fv) + 2};
    }

    UnrootedComplexity result;
    result.per_edge = per_edge;
    result.value = std::numeric_limits<int>::max();
    for (const auto& [edge, f] : per_edge) {
        if (f < result.value || (f == result.value && edge < result.argmin_edge)) {
            result.value = f;
            result.argmin_edge = edge;
        }
    }
    return result;
}

} // namespace

UnrootedComplexity unrooted_complexity(const WeightedTree& t) {
    return unrooted_complexity_impl(t, true);
}

UnrootedComplexity unrooted_complexity_serial(const WeightedTree& t) {
    return unrooted_complexity_impl(t, false);
}

// ---------------------------------------------------------------------------
// Minimal leaf counts.
// ---------------------------------------------------------------------------

namespace {

long long min_leaf_count_memo(int k, int f0, std::map<int, long long>& memo) {
    if (f0 == 0) return 1;
    if (f0 < k - 1) return f0 + 1;
    if (auto it = memo.find(f0); it != memo.end()) return it->second;
    long long best = std::numeric_limits<long long>::max();
    for (int i = 2; i < k; ++i) {
        long long sub = min_leaf_count_memo(k, f0 - i + 1, memo);
        if (sub > std::numeric_limits<long long>::max() / i)
            throw std::overflow_error("minimal leaf count exceeds long long");
        best = std::min(best, i * sub);
    }
    memo.emplace(f0, best);
    return best;
}

} // namespace

long long min_leaf_count(int k, int f0) {
    if (k < 3) throw std::invalid_argument("degree bound k must be >= 3");
    if (f0 < 0) throw std::invalid_argument("complexity must be >= 0");
    std::map<int, long long> memo;
    return min_leaf_count_memo(k, f0, memo);
}

MinLeafTable min_leaf_table(int k, int max_f0) {
    MinLeafTable table;
    table.k = k;
    std::map<int, long long> memo;
    for (int f0 = 0; f0 <= max_f0; ++f0) table.s.push_back(min_leaf_count_memo(k, f0, memo));
    return table;
}

std::optional<long long> brute_force_min_leaves(int k, int f0, int leaf_budget) {
    if (k < 3) throw std::invalid_argument("degree bound k must be >= 3");
    if (f0 < 0 || leaf_budget < 1) return std::nullopt;

    // achievable[m] = every complexity value realized by some rooted shape
    // with exactly m leaves and 2..k-1 children per internal node. Built by
    // trying every decomposition into child subtrees; the (leaves,
    // complexity) abstraction is lossless for the f-recurrence.
    std::vector<std::set<int>> achievable(static_cast<std::size_t>(leaf_budget) + 1);
    achievable[1] = {0};

    for (int m = 2; m <= leaf_budget; ++m) {
        // parts: non-increasing leaf counts chosen so far, with one
        // complexity value per part; recursion enumerates all of them.
        std::vector<std::pair<int, int>> parts; // (leaves, f)
        std::function<void(int, int, int)> extend = [&](int remaining, int max_part, int count) {
            if (count >= 2 && remaining == 0) {
                std::vector<int> child_f;
                child_f.reserve(parts.size());
                for (auto& [leaves, f] : parts) {
                    (void)leaves;
                    child_f.push_back(f);
                }
                achievable[m].insert(combine_children(child_f));
                return;
            }
            if (remaining == 0 || count == k - 1) return;
            for (int take = std::min(remaining, max_part); take >= 1; --take) {
                // Remaining parts each need >= 1 leaf.
                if (remaining - take > (k - 2 - count) * take) continue;
                for (int f : achievable[take]) {
                    parts.emplace_back(take, f);
                    extend(remaining - take, take, count + 1);
                    parts.pop_back();
                }
            }
        };
        extend(m, m - 1, 0);
    }

    for (int m = 1; m <= leaf_budget; ++m)
        if (achievable[m].count(f0)) return m;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Filled trees.
// ---------------------------------------------------------------------------

LayerDegreeSequence LayerDegreeSequence::parse(std::string_view csv) {
    LayerDegreeSequence seq;
    std::string token;
    std::istringstream in{std::string(csv)};
    while (std::getline(in, token, ',')) {
        try {
            seq.q.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad layer-degree entry '" + token + "'");
        }
    }
    return seq;
}

bool LayerDegreeSequence::valid() const {
    if (q.empty()) return false;
    return std::all_of(q.begin(), q.end(), [](int v) { return v >= 2; });
}

LayerDegreeSequence LayerDegreeSequence::normalized() const {
    LayerDegreeSequence out = *this;
    std::sort(out.q.begin(), out.q.end(), std::greater<>());
    return out;
}

std::pair<long long, long long> filled_complexity_and_leaves(const LayerDegreeSequence& seq) {
    if (!seq.valid()) throw std::invalid_argument("layer-degree sequence needs entries >= 2");
    long long complexity = 0;
    long long leaves = 1;
    for (int qi : seq.q) {
        complexity += qi - 1;
        if (leaves > std::numeric_limits<long long>::max() / qi)
            throw std::overflow_error("filled tree leaf count exceeds long long");
        leaves *= qi;
    }
    return {complexity, leaves};
}

// ---------------------------------------------------------------------------
// Exact bound predicates. All comparisons against (k-2) log_{k-1}(n) reduce
// to integer power comparisons evaluated with arbitrary precision.
// ---------------------------------------------------------------------------

long long hein_bound_ceil(long long n, int k) {
    if (n < 1 || k < 3) throw std::invalid_argument("need n >= 1 and k >= 3");
    // smallest e with (k-1)^e >= n^(k-2)  ==  ceil(log_{k-1}(n^(k-2)))
    cpp_int target = ipow(n, k - 2);
    cpp_int power = 1;
    long long e = 0;
    while (power < target) {
        power *= (k - 1);
        ++e;
    }
    return e + (k - 2);
}

bool rooted_bound_holds(long long f0, long long n, int k) {
    if (n < 1 || k < 3) throw std::invalid_argument("need n >= 1 and k >= 3");
    long long lhs_exp = f0 - (k - 2);
    if (lhs_exp <= 0) return true;
    return ipow(k - 1, lhs_exp) <= ipow(n, k - 2);
}

bool total_bound_holds(long long total, long long n, int k) {
    if (n < 1 || k < 3) throw std::invalid_argument("need n >= 1 and k >= 3");
    long long lhs_exp = total - n * k;
    if (lhs_exp <= 0) return true;
    return ipow(k - 1, lhs_exp) <= ipow(n, n * (k - 2));
}

} // namespace hein
