#pragma once

#include "heintree/beanstalk.hpp"
#include "heintree/complexity.hpp"
#include "heintree/tree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hein {

// Deterministic 64-bit multiplicative congruential generator. Fixed
// constants, fixed seeding, no platform dependence — identical draws
// everywhere, forever, which is what frozen test fixtures need.
//   state_0 = 2*seed + 1 (mod 2^64, kept odd)
//   state   = state * 6364136223846793005 (mod 2^64)   [Knuth's multiplier]
//   output  = high 32 bits of the new state
// pick(m) maps an output u to (u * m) >> 32 — deterministic multiply-shift.
class Mcg64 {
public:
    explicit Mcg64(std::uint64_t seed) : state_(2 * seed + 1) {}
    std::uint32_t next();
    std::uint64_t pick(std::uint64_t bound); // uniform-ish in [0, bound)

private:
    std::uint64_t state_;
};

struct WeightMode {
    enum class Kind { Unit, RandomRational };
    Kind kind = Kind::Unit;
    std::uint64_t seed = 0;
    long long range = 10; // numerators drawn from [1, range], denominators [1, 8]

    static WeightMode unit() { return {}; }
    static WeightMode random_rational(std::uint64_t seed, long long range = 10);
};

// All generators label leaves L1..Ln in construction order and assign edge
// weights at the end, walking edges in construction order (unit weights, or
// p/q draws from Mcg64(weight seed)). Rooted families set root_hint.

// Filled tree for a layer-degree sequence: every depth-i node has q_{i+1}
// children. Rooted; the root has q_1 children (possibly 2 — see validate()).
WeightedTree make_filled(const LayerDegreeSequence& seq, const WeightMode& w = WeightMode::unit());

// Unrooted caterpillar: a spine of internal nodes each bearing one pendant
// leaf, the spine ends bearing one extra leaf each. No degree-2 nodes.
// n = 2 is the single edge, n = 3 the star.
WeightedTree make_caterpillar(int n, const WeightMode& w = WeightMode::unit());

// Rooted binary g-beanstalk with n leaves, built top-down: at every node the
// smaller side receives the LARGEST admissible leaf count s (s <= m/2 and
// s <= g(m - s)), so the tree is as unbalanced as g permits — the worst case
// the bounds must cover. Audited before returning.
WeightedTree make_beanstalk(const GrowthSpec& g, int n, const WeightMode& w = WeightMode::unit());

// Random unrooted tree with max degree k: leaves are attached one at a time
// to a uniformly chosen site (edge split, or internal node of degree < k).
// Site order: edges in creation order, then internal nodes ascending.
WeightedTree make_random(int n, int k, std::uint64_t seed, const WeightMode& w = WeightMode::unit());

// The worked 10-leaf example: A..F internal, unit weights,
//   A: leaves L1 L2          B: A, L3, L4, neighbor C
//   C: neighbors B, D, E     D: leaves L5 L6 L7
//   E: leaf L8, child F      F: leaves L9 L10
// Unrooted complexity 4; several edges tie at 4, and B and C are built as
// nodes 0 and 1 so the lexicographic argmin tie-break selects edge B-C.
WeightedTree fig2_fixture();

// Checks that `rooted` (must carry a root hint) is a valid g-beanstalk:
// every node has at most 2 children (a unary root is permitted; the
// constraint there is vacuous), and at every 2-child node the smaller side's
// leaf count is at most g(larger side's leaf count), exactly. Throws
// std::logic_error naming the offending node otherwise.
void beanstalk_audit(const WeightedTree& rooted, const GrowthSpec& g);

} // namespace hein
