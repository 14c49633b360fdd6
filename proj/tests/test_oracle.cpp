#include "heintree/oracle.hpp"

#include "heintree/generators.hpp"
#include "heintree/tree.hpp"

#include "doctest.h"

using hein::DistanceOracle;
using hein::QueryReport;
using hein::Rational;
using hein::WeightedTree;

namespace {

WeightedTree star4() {
    return WeightedTree::from_edges(5,
                                    {{0, 1, Rational(1)},
                                     {0, 2, Rational(2)},
                                     {0, 3, Rational(3)},
                                     {0, 4, Rational(1, 2)}},
                                    {{1, "a"}, {2, "b"}, {3, "c"}, {4, "d"}});
}

} // namespace

TEST_CASE("oracle answers exact distances and counts distinct pairs once") {
    DistanceOracle o(star4());
    CHECK(o.query_count() == 0);
    CHECK(o.query("a", "b") == Rational(3));
    CHECK(o.query_count() == 1);
    CHECK(o.query("b", "a") == Rational(3)); // unordered pair: cache hit
    CHECK(o.query_count() == 1);
    CHECK(o.query("a", "b") == Rational(3));
    CHECK(o.query_count() == 1);
    CHECK(o.query("c", "d") == Rational(7, 2));
    CHECK(o.query_count() == 2);
}

TEST_CASE("same-leaf queries are answered free of charge") {
    DistanceOracle o(star4());
    CHECK(o.query("a", "a") == Rational(0));
    CHECK(o.query_count() == 0);
    CHECK(o.query_log().empty());
}

TEST_CASE("unknown labels are rejected") {
    DistanceOracle o(star4());
    CHECK_THROWS_AS(o.query("a", "nope"), std::invalid_argument);
    CHECK_THROWS_AS(o.query("nope", "a"), std::invalid_argument);
    CHECK(o.query_count() == 0);
}

TEST_CASE("the oracle hands out the sorted label set") {
    DistanceOracle o(star4());
    CHECK(o.leaf_labels() == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("query log records counted queries in order; reset clears only the log") {
    DistanceOracle o(star4());
    o.query("a", "b");
    o.query("b", "a"); // cache hit: not logged
    o.query("a", "c");
    REQUIRE(o.query_log().size() == 2);
    CHECK(o.query_log()[0].first == std::make_pair(std::string("a"), std::string("b")));
    CHECK(o.query_log()[1].second == Rational(4));

    o.reset_log();
    CHECK(o.query_log().empty());
    CHECK(o.query_count() == 2);
    o.query("a", "b"); // still cached: no new count, no new log entry
    CHECK(o.query_count() == 2);
    CHECK(o.query_log().empty());
}

TEST_CASE("oracle distances agree with direct path evaluation on random trees") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        WeightedTree t = hein::make_random(9, 3, seed, hein::WeightMode::random_rational(seed, 9));
        DistanceOracle o(t);
        const auto labels = o.leaf_labels();
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                CHECK(o.query(labels[i], labels[j]) == hein::leaf_distance(t, labels[i], labels[j]));
        CHECK(o.query_count() == static_cast<long long>(labels.size() * (labels.size() - 1) / 2));
    }
}

TEST_CASE("query report totals") {
    QueryReport r;
    r.initial_queries = 1;
    r.per_insertion = {2, 1, 3};
    CHECK(r.total() == 7);
    CHECK(r.max_per_insertion() == 3);
    QueryReport empty;
    CHECK(empty.total() == 0);
    CHECK(empty.max_per_insertion() == 0);
}
