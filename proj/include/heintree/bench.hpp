#pragma once

#include "heintree/beanstalk.hpp"
#include "heintree/complexity.hpp"
#include "heintree/generators.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hein {

// One reconstruction run. The CSV schema is frozen: exactly these eleven
// columns, in this order, header row included, LF line endings. Re-running
// the same config must reproduce the file byte for byte.
struct BenchRecord {
    std::string family;
    int n = 0;
    int k = 0;                        // degree bound (random) or measured max degree
    std::uint64_t seed = 0;
    std::string insertion_order;      // "given" | "random:SEED" | "depth-asc" | "depth-desc"
    long long total_queries = 0;
    long long max_per_insertion = 0;
    int unrooted_complexity_final = 0;
    long long hein_bound = 0;         // exact integer ceiling of (k-2)log_{k-1}(n)+(k-2)
    std::optional<long long> beanstalk_bound; // beanstalk family only; empty cell otherwise
    bool within_bound = false;        // exact total bound AND every insertion within budget
};

// Flat key=value configuration ('#' comments, blank lines ignored):
//   family  = random | caterpillar | filled | beanstalk      (required)
//   n       = 4,8,16..128            int list; ".." doubles (16..128 = 16,32,64,128)
//   k       = 3,4                    random only (default 3)
//   seeds   = 1..20                  list or inclusive range (default 1)
//   orders  = given,random:7         insertion order tags (default given)
//   weights = unit | rational:RANGE  (default unit)
//   g       = linear:1/2             beanstalk family (required there)
//   seq     = 3,2                    filled family (required there)
struct BenchConfig {
    std::string family;
    std::vector<int> sizes;
    std::vector<int> ks{3};
    std::vector<std::uint64_t> seeds{1};
    std::vector<std::string> orders{"given"};
    std::string weights = "unit";
    std::optional<GrowthSpec> g;
    std::vector<int> seq;
};

// Throws std::invalid_argument with the offending line on bad input.
BenchConfig parse_bench_config(std::string_view text);

// Label sequence for an insertion-order tag. "given" is generation order
// (L1..Ln: shorter labels first, then byte order); "random:SEED" shuffles it
// deterministically; "depth-asc"/"depth-desc" sort by hop distance from the
// designated root (node 0 when none), ties keeping generation order.
std::vector<std::string> insertion_order_labels(const WeightedTree& hidden, const std::string& tag);

// Generates every (n, k, seed, order) instance, reconstructs it through a
// fresh oracle, and verifies the result is equivalent to the hidden tree —
// a mismatch throws std::runtime_error naming the instance. Instances run
// concurrently (OpenMP); records are sorted by (family, n, k, seed, order)
// before returning, so output order never depends on scheduling.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

// The frozen 11-column CSV described above.
std::string emit_csv(const std::vector<BenchRecord>& records);

// Per-family plot rows: family, n, totalQueries/n (decimal), boundValue
// (per-insertion budget: heinBound + 2, or the beanstalk bound if present).
std::string emit_plot_data(const std::vector<BenchRecord>& records);

} // namespace hein
