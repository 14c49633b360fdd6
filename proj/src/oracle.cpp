#include "heintree/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hein {

DistanceOracle::DistanceOracle(WeightedTree hidden) : hidden_(std::move(hidden)) {
    labels_ = hidden_.labels_sorted();
}

Rational DistanceOracle::query(std::string_view a, std::string_view b) {
    if (!hidden_.node_of(a)) throw std::invalid_argument("unknown leaf label '" + std::string(a) + "'");
    if (!hidden_.node_of(b)) throw std::invalid_argument("unknown leaf label '" + std::string(b) + "'");
    if (a == b) return Rational(0); // free, never counted

    std::pair<std::string, std::string> key{std::string(std::min(a, b)), std::string(std::max(a, b))};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    Rational d = leaf_distance(hidden_, a, b);
    cache_.emplace(key, d);
    ++count_;
    log_.push_back({key, d});
    return d;
}

long long QueryReport::total() const {
    long long t = initial_queries;
    for (long long q : per_insertion) t += q;
    return t;
}

long long QueryReport::max_per_insertion() const {
    long long m = 0;
    for (long long q : per_insertion) m = std::max(m, q);
    return m;
}

} // namespace hein
