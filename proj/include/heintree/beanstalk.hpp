#pragma once

#include "heintree/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hein {

using BigInt = boost::multiprecision::cpp_int;

// Growth law g: N -> [1, inf) bounding how unbalanced a beanstalk may be:
// at every binary node the smaller child subtree holds at most g(leaves of
// the larger child) leaves. Kinds:
//   LINEAR   g(n) = gamma * n,  gamma in (0, 1] exact rational
//   POWER    g(n) = n^(1/q),    integer q >= 2 (unit-fraction exponents keep
//                               every comparison decidable in integers)
//   CONSTANT g(n) = a,          integer a >= 1
//   TABLE    explicit 1-indexed values, nondecreasing, 1 <= v[i] <= i,
//            clamped at the last entry beyond the table
class GrowthSpec {
public:
    enum class Kind { Linear, Power, Constant, Table };

    static GrowthSpec linear(const Rational& gamma);
    static GrowthSpec power_inv(long long q);
    static GrowthSpec constant(long long a);
    static GrowthSpec table(std::vector<long long> values);

    // "linear:1/2" | "power:1/2" | "const:4" | "table:1,1,2,3"
    static GrowthSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    const Rational& gamma() const { return gamma_; }          // Linear
    long long power_q() const { return q_; }                  // Power (g = n^(1/q))
    long long constant_a() const { return a_; }               // Constant
    const std::vector<long long>& table_values() const { return table_; }

    std::string to_string() const;

private:
    Kind kind_ = Kind::Constant;
    Rational gamma_{1};
    long long q_ = 2;
    long long a_ = 1;
    std::vector<long long> table_;
};

// g(n) clamped below at 1 (LINEAR dips under 1 only at n < 1/gamma; audits
// and generators need g >= 1). POWER returns floor(n^(1/q)), exact whenever
// n is a perfect q-th power.
Rational g_eval(const GrowthSpec& g, long long n);

// Raw comparison g(x) >= n without the clamp, decided exactly. The
// pseudo-inverse and the h-iteration are defined against the raw law: the
// clamp would warp ghat_inverse(1) for LINEAR and break the Theorem-4 trace.
bool g_at_least(const GrowthSpec& g, const BigInt& x, const BigInt& n);

// ghat^{-1}(n) = inf{ x in N : g(x) >= n }. nullopt encodes INFINITY (a
// bounded law can never reach n) — an explicit value, not an error.
std::optional<BigInt> ghat_inverse(const GrowthSpec& g, const BigInt& n);

// Theorem-4 iteration: h(m) = ghat^{-1}(m) + m starting from 1; any
// n-leaf beanstalk has complexity < min{ C : n < h^(C)(1) }.
struct BeanstalkBound {
    long long n = 0;
    long long bound = 0;            // the min-C value above
    std::vector<BigInt> trace;      // h^(0)(1), h^(1)(1), ... (finite prefix)
    bool hit_infinity = false;      // ghat^{-1} returned INFINITY mid-iteration
    bool closed_form_substituted = false; // CONSTANT: Corollary case 4 used instead
};
BeanstalkBound beanstalk_complexity_bound(const GrowthSpec& g, long long n);

// Closed forms (Corollary):
//   LINEAR   ceil(log_{1+1/gamma}(n))
//   POWER    floor(log_q(log2 n)) + 1         (n >= 2)
//   CONSTANT ceil(log2 a) + 1
// Throws std::invalid_argument for TABLE (no closed form).
long long corollary_bound(const GrowthSpec& g, long long n);

// The simpler bound min{ C : g^(C)(n) < 2 }, by direct iteration. LINEAR
// iterates exact rationals; POWER iterates floored integers; TABLE floors
// before lookup. Throws std::domain_error if the iteration fails to descend
// (g(m) >= m somewhere above 1, e.g. CONSTANT a >= 2), guarded by a step cap.
long long simple_iteration_bound(const GrowthSpec& g, long long n);

} // namespace hein
