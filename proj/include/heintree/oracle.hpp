#pragma once

#include "heintree/tree.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hein {

// Pairwise leaf-distance oracle over a hidden tree. The tree structure is
// never exposed through this interface — only distances. Results are cached
// by unordered pair; query_count() is the number of distinct pairs ever
// requested (cache hits and same-leaf queries are free). Not thread-safe:
// one oracle belongs to one inference instance on one thread.
class DistanceOracle {
public:
    explicit DistanceOracle(WeightedTree hidden);

    // d(a,b) on the hidden tree. query(x,x) answers 0 without counting.
    // Throws std::invalid_argument on unknown labels.
    Rational query(std::string_view a, std::string_view b);

    long long query_count() const { return count_; }

    // Chronological log of counted queries, for per-insertion attribution.
    // reset_log clears the log only — never the cache or the count.
    using LogEntry = std::pair<std::pair<std::string, std::string>, Rational>;
    const std::vector<LogEntry>& query_log() const { return log_; }
    void reset_log() { log_.clear(); }

    // The algorithm is given the label set up front (sorted).
    const std::vector<std::string>& leaf_labels() const { return labels_; }

private:
    WeightedTree hidden_;
    std::map<std::pair<std::string, std::string>, Rational> cache_;
    std::vector<LogEntry> log_;
    std::vector<std::string> labels_;
    long long count_ = 0;
};

// Query accounting for one full reconstruction: 1 seed query for the initial
// pair, then one entry per inserted leaf. total() = initial + sum.
struct QueryReport {
    long long initial_queries = 0;
    std::vector<long long> per_insertion;
    long long total() const;
    long long max_per_insertion() const; // 0 if no insertions
};

} // namespace hein
