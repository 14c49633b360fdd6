#pragma once

#include "heintree/tree.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hein {

// Dense symmetric all-pairs leaf distance matrix, labels in ascending byte
// order. Equality is exact (rational entries), which is what tree
// equivalence is defined over.
struct DistanceMatrix {
    std::vector<std::string> labels;
    std::vector<Rational> entries; // n*n row-major

    int size() const { return static_cast<int>(labels.size()); }
    const Rational& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * labels.size() + j]; }
    bool operator==(const DistanceMatrix&) const = default;
};

// Production kernel: one traversal per source leaf, parallelized over
// sources with OpenMP. Requires unique leaf labels.
DistanceMatrix distance_matrix(const WeightedTree& t);

// Serial reference: an independent code path (one path walk per pair) kept
// for testing the parallel kernel against. O(n^2 * V).
DistanceMatrix distance_matrix_serial(const WeightedTree& t);

// Four-point condition: for every 4-tuple of leaves the two largest of the
// three pairings d(a,b)+d(c,d), d(a,c)+d(b,d), d(a,d)+d(b,c) must be equal.
// Returns a witness tuple if violated, nullopt if the matrix is additive.
std::optional<std::array<std::string, 4>> four_point_violation(const DistanceMatrix& m);

} // namespace hein
