#include "heintree/complexity.hpp"
#include "heintree/distance_matrix.hpp"
#include "heintree/generators.hpp"

#include "doctest.h"

#include <algorithm>
#include <vector>

using hein::DistanceMatrix;
using hein::Rational;
using hein::WeightedTree;

namespace {

std::vector<WeightedTree> kernel_corpus() {
    std::vector<WeightedTree> out;
    for (std::uint64_t seed : {1, 2, 3, 4, 5})
        out.push_back(hein::make_random(30, 4, seed, hein::WeightMode::random_rational(seed, 9)));
    out.push_back(hein::make_random(41, 3, 6));
    out.push_back(hein::make_caterpillar(40));
    out.push_back(hein::make_filled(hein::LayerDegreeSequence::parse("3,2,2")));
    out.push_back(hein::make_beanstalk(hein::GrowthSpec::parse("linear:1/2"), 33));
    out.push_back(hein::fig2_fixture());
    return out;
}

} // namespace

TEST_CASE("the parallel distance kernel matches the serial reference exactly") {
    for (const WeightedTree& t : kernel_corpus()) {
        DistanceMatrix fast = hein::distance_matrix(t);
        DistanceMatrix slow = hein::distance_matrix_serial(t);
        CHECK(fast == slow);
        CHECK(fast.labels == t.labels_sorted());
        // Symmetric with a zero diagonal.
        for (int i = 0; i < fast.size(); ++i) {
            CHECK(fast.at(i, i) == Rational(0));
            for (int j = i + 1; j < fast.size(); ++j) CHECK(fast.at(i, j) == fast.at(j, i));
        }
    }
}

TEST_CASE("the parallel complexity kernel matches the serial reference exactly") {
    for (const WeightedTree& t : kernel_corpus()) {
        hein::UnrootedComplexity fast = hein::unrooted_complexity(t);
        hein::UnrootedComplexity slow = hein::unrooted_complexity_serial(t);
        CHECK(fast.value == slow.value);
        CHECK(fast.argmin_edge == slow.argmin_edge);
        CHECK(fast.per_edge == slow.per_edge);
    }
}

TEST_CASE("tree distance matrices satisfy the four-point condition") {
    for (const WeightedTree& t : kernel_corpus())
        if (t.leaf_count() <= 33) // the check is O(n^4); skip the largest instances
            CHECK_FALSE(hein::four_point_violation(hein::distance_matrix(t)).has_value());
}

TEST_CASE("a doctored matrix is caught with a concrete witness") {
    DistanceMatrix m = hein::distance_matrix(hein::make_caterpillar(6));
    const int i = 0, j = 1;
    m.entries[static_cast<std::size_t>(i) * m.labels.size() + j] += Rational(10);
    m.entries[static_cast<std::size_t>(j) * m.labels.size() + i] += Rational(10);
    auto witness = hein::four_point_violation(m);
    REQUIRE(witness.has_value());
    // The witness names four distinct leaves of the matrix.
    std::vector<std::string> w(witness->begin(), witness->end());
    std::sort(w.begin(), w.end());
    CHECK(std::adjacent_find(w.begin(), w.end()) == w.end());
    for (const std::string& label : w)
        CHECK(std::find(m.labels.begin(), m.labels.end(), label) != m.labels.end());
}
