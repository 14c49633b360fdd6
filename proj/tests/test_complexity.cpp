#include "heintree/complexity.hpp"

#include "heintree/generators.hpp"
#include "heintree/tree.hpp"

#include "doctest.h"

#include <vector>

using hein::LayerDegreeSequence;
using hein::Rational;
using hein::WeightedTree;

namespace {

WeightedTree star(int m) {
    std::vector<WeightedTree::Edge> edges;
    std::map<int, std::string> labels;
    for (int i = 1; i <= m; ++i) {
        edges.push_back({0, i, Rational(1)});
        labels[i] = "x" + std::to_string(i);
    }
    return WeightedTree::from_edges(m + 1, edges, labels);
}

} // namespace

TEST_CASE("single node has complexity 0") {
    WeightedTree t = WeightedTree::from_edges(1, {}, {{0, "only"}});
    CHECK(hein::rooted_complexity(t, 0).value == 0);
}

TEST_CASE("two-leaf edge: rooted 0, unrooted 2") {
    WeightedTree t = WeightedTree::from_edges(2, {{0, 1, Rational(5)}}, {{0, "a"}, {1, "b"}});
    CHECK(hein::rooted_complexity(t, 0).value == 0);
    CHECK(hein::rooted_complexity(t, 1).value == 0);
    auto u = hein::unrooted_complexity_serial(t);
    CHECK(u.value == 2);
    CHECK(u.argmin_edge == std::make_pair(0, 1));
    CHECK(u.per_edge.size() == 1);
}

TEST_CASE("stars: m-1 from the center, m-2 from a leaf, m unrooted") {
    for (int m = 3; m <= 7; ++m) {
        WeightedTree t = star(m);
        CHECK(hein::rooted_complexity(t, 0).value == m - 1);
        CHECK(hein::rooted_complexity(t, 1).value == m - 2);
        CHECK(hein::unrooted_complexity_serial(t).value == m);
    }
}

TEST_CASE("balanced binary 4-leaf tree rooted at its top is 2") {
    WeightedTree t = WeightedTree::from_edges(7,
                                              {{0, 1, Rational(1)},
                                               {0, 2, Rational(1)},
                                               {1, 3, Rational(1)},
                                               {1, 4, Rational(1)},
                                               {2, 5, Rational(1)},
                                               {2, 6, Rational(1)}},
                                              {{3, "a"}, {4, "b"}, {5, "c"}, {6, "d"}}, 0);
    auto r = hein::rooted_complexity(t, 0);
    CHECK(r.value == 2);
    CHECK(r.per_node[1] == 1);
    CHECK(r.per_node[2] == 1);
    CHECK(r.per_node[3] == 0);
}

TEST_CASE("rooted_complexity_away matches rooting the cut-off piece") {
    WeightedTree t = star(5);
    // Away from the center, a leaf is a singleton.
    CHECK(hein::rooted_complexity_away(t, 1, 0) == 0);
    // Center with one leaf removed behaves like a 4-star center.
    CHECK(hein::rooted_complexity_away(t, 0, 1) == 3);
    // banned = -1 is the whole tree.
    CHECK(hein::rooted_complexity_away(t, 0, -1) == 4);
}

TEST_CASE("caterpillars have unrooted complexity 3 from n = 4 on") {
    CHECK(hein::unrooted_complexity_serial(hein::make_caterpillar(2)).value == 2);
    CHECK(hein::unrooted_complexity_serial(hein::make_caterpillar(3)).value == 3);
    for (int n : {4, 5, 6, 10, 33, 64})
        CHECK(hein::unrooted_complexity_serial(hein::make_caterpillar(n)).value == 3);
}

TEST_CASE("caterpillar rooted at an end leaf has complexity 1") {
    for (int n : {4, 5, 9}) {
        WeightedTree t = hein::make_caterpillar(n);
        CHECK(hein::rooted_complexity(t, *t.node_of("L1")).value == 1);
    }
}

TEST_CASE("10-leaf worked example: unrooted 4 via the B-C edge, both sides 2") {
    WeightedTree t = hein::fig2_fixture();
    REQUIRE(t.leaf_count() == 10);
    CHECK(validate(t).empty());

    auto u = hein::unrooted_complexity_serial(t);
    CHECK(u.value == 4);
    CHECK(u.argmin_edge == std::make_pair(0, 1)); // the B-C edge
    CHECK(u.per_edge.size() == t.edges().size());

    // The two rooted halves on either side of that edge.
    CHECK(hein::rooted_complexity_away(t, 0, 1) == 2);
    CHECK(hein::rooted_complexity_away(t, 1, 0) == 2);

    // Every split value is an upper bound; the argmin attains the minimum.
    for (const auto& [edge, f] : u.per_edge) {
        (void)edge;
        CHECK(f >= u.value);
    }

    // Rooting at the leaf L1 gives 2 as well.
    CHECK(hein::rooted_complexity(t, *t.node_of("L1")).value == 2);
}

TEST_CASE("parallel and serial unrooted complexity agree") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        WeightedTree t = hein::make_random(20, 4, seed);
        auto a = hein::unrooted_complexity(t);
        auto b = hein::unrooted_complexity_serial(t);
        CHECK(a.value == b.value);
        CHECK(a.argmin_edge == b.argmin_edge);
        CHECK(a.per_edge == b.per_edge);
    }
}

TEST_CASE("minimal leaf counts for max degree 3 double after the start") {
    hein::MinLeafTable t = hein::min_leaf_table(3, 5);
    CHECK(t.s == std::vector<long long>{1, 2, 4, 8, 16, 32});
    for (int f0 = 0; f0 <= 5; ++f0) CHECK(hein::min_leaf_count(3, f0) == t.s[f0]);
}

TEST_CASE("minimal leaf counts for max degree 4 and 5") {
    CHECK(hein::min_leaf_table(4, 4).s == std::vector<long long>{1, 2, 3, 6, 9});
    CHECK(hein::min_leaf_count(4, 5) == 18);
    CHECK(hein::min_leaf_table(5, 5).s == std::vector<long long>{1, 2, 3, 4, 8, 12});
}

TEST_CASE("exhaustive shape search confirms the minimal leaf recursion") {
    for (int k : {3, 4, 5}) {
        for (int f0 = 0; f0 <= 4; ++f0) {
            const long long s = hein::min_leaf_count(k, f0);
            if (s > 16) continue; // keep the enumeration instant
            auto brute = hein::brute_force_min_leaves(k, f0, static_cast<int>(s));
            REQUIRE(brute.has_value());
            CHECK(*brute == s);
            // One leaf below the minimum, the complexity is unreachable.
            if (s > 1) {
                auto below = hein::brute_force_min_leaves(k, f0, static_cast<int>(s) - 1);
                CHECK_FALSE(below.has_value());
            }
        }
    }
}

TEST_CASE("layer degree sequences parse and validate") {
    LayerDegreeSequence s = LayerDegreeSequence::parse("3,2");
    CHECK(s.q == std::vector<int>{3, 2});
    CHECK(s.valid());
    CHECK(LayerDegreeSequence::parse("2,4,3").normalized().q == std::vector<int>{4, 3, 2});
    CHECK_FALSE(LayerDegreeSequence::parse("").valid());    // parsing is lenient;
    CHECK_FALSE(LayerDegreeSequence::parse("3,1").valid()); // valid() is the gate

    CHECK_THROWS_AS(LayerDegreeSequence::parse("3,,2"), std::invalid_argument);
    CHECK_THROWS_AS(LayerDegreeSequence::parse("a"), std::invalid_argument);
}

TEST_CASE("filled-tree algebra: complexity sums, leaves multiply") {
    auto check = [](const char* csv, long long f0, long long leaves) {
        auto [f, n] = hein::filled_complexity_and_leaves(LayerDegreeSequence::parse(csv));
        CHECK(f == f0);
        CHECK(n == leaves);
    };
    check("2", 1, 2);
    check("3,2", 3, 6);
    check("2,2,2", 3, 8);
    check("4,3,2", 6, 24);
    check("5", 4, 5);
}

TEST_CASE("filled-tree algebra matches measured construction") {
    for (const char* csv : {"2", "3", "3,2", "2,2,2", "4,2", "3,3,2"}) {
        LayerDegreeSequence seq = LayerDegreeSequence::parse(csv);
        WeightedTree t = hein::make_filled(seq);
        auto [f, n] = hein::filled_complexity_and_leaves(seq);
        REQUIRE(t.root_hint().has_value());
        CHECK(hein::rooted_complexity(t, *t.root_hint()).value == f);
        CHECK(t.leaf_count() == n);
    }
}

TEST_CASE("n-leaf complexity bound: integer ceiling and exact predicates") {
    CHECK(hein::hein_bound_ceil(2, 3) == 2);  // log2(2) = 1, +1
    CHECK(hein::hein_bound_ceil(8, 3) == 4);  // exact power
    CHECK(hein::hein_bound_ceil(9, 3) == 5);  // rounds up
    CHECK(hein::hein_bound_ceil(6, 3) == 4);
    CHECK(hein::hein_bound_ceil(16, 4) == 8); // 3^e >= 256 first at e = 6, +2

    CHECK(hein::rooted_bound_holds(3, 6, 3));      // 2^2 = 4 <= 6
    CHECK_FALSE(hein::rooted_bound_holds(4, 6, 3)); // 2^3 = 8 > 6
    CHECK(hein::rooted_bound_holds(1, 2, 3));
    CHECK(hein::rooted_bound_holds(0, 1, 5));      // exponent <= 0 always holds

    CHECK(hein::total_bound_holds(20, 4, 3));       // 2^8 = 256 <= 4^4 = 256
    CHECK_FALSE(hein::total_bound_holds(21, 4, 3)); // 2^9 = 512 > 256
    CHECK(hein::total_bound_holds(12, 4, 3));       // exponent <= 0
}

TEST_CASE("filled trees are the equality cases of the rooted bound") {
    // Sequence of j copies of k-1 has f0 = j(k-2) and n = (k-1)^j, which
    // meets the bound with slack under (k-2)+1: one whole slack-step more
    // must tip it over.
    for (int k : {3, 4}) {
        for (int j = 1; j <= 4; ++j) {
            LayerDegreeSequence seq;
            seq.q.assign(j, k - 1);
            auto [f0, n] = hein::filled_complexity_and_leaves(seq);
            CHECK(hein::rooted_bound_holds(f0, n, k));
            CHECK_FALSE(hein::rooted_bound_holds(f0 + (k - 2) + 1, n, k));
        }
    }
}
