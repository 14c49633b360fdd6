#pragma once

#include <boost/rational.hpp>
#include <string>
#include <string_view>

namespace hein {

// Exact rational scalar used for every edge weight, distance, and anchor
// position. Anchor classification (at-node vs inside-edge) depends on exact
// equality, so no floating point is allowed anywhere in the core.
using Rational = boost::rational<long long>;

// Accepts "3", "2.5", "7/2" (optionally signed). Throws std::invalid_argument
// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: integers as "n", everything else as "p/q" in lowest terms.
std::string format_rational(const Rational& r);

} // namespace hein
