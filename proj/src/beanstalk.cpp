#include "heintree/beanstalk.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hein {

namespace {

constexpr long long kStepCap = 1'000'000;

BigInt big_pow(BigInt base, long long exp) {
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// Largest r >= 0 with r^q <= n.
long long integer_root(long long n, long long q) {
    if (n < 0) throw std::invalid_argument("integer_root of a negative number");
    long long lo = 0, hi = n;
    // Tighten hi: 2^63 > n, so the root never exceeds 2^(63/q) + 1.
    hi = std::min<long long>(hi, (1LL << (63 / q)) + 1);
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (big_pow(mid, q) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace

// ---------------------------------------------------------------------------
// GrowthSpec
// ---------------------------------------------------------------------------

GrowthSpec GrowthSpec::linear(const Rational& gamma) {
    if (gamma <= Rational(0) || gamma > Rational(1))
        throw std::invalid_argument("linear growth needs gamma in (0, 1]");
    GrowthSpec g;
    g.kind_ = Kind::Linear;
    g.gamma_ = gamma;
    return g;
}

GrowthSpec GrowthSpec::power_inv(long long q) {
    if (q < 2) throw std::invalid_argument("power growth needs an exponent 1/q with q >= 2");
    GrowthSpec g;
    g.kind_ = Kind::Power;
    g.q_ = q;
    return g;
}

GrowthSpec GrowthSpec::constant(long long a) {
    if (a < 1) throw std::invalid_argument("constant growth needs a >= 1");
    GrowthSpec g;
    g.kind_ = Kind::Constant;
    g.a_ = a;
    return g;
}

GrowthSpec GrowthSpec::table(std::vector<long long> values) {
    if (values.empty()) throw std::invalid_argument("growth table must be nonempty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1 || values[i] > static_cast<long long>(i) + 1)
            throw std::invalid_argument("growth table needs 1 <= value[i] <= i (1-indexed)");
        if (i > 0 && values[i] < values[i - 1])
            throw std::invalid_argument("growth table must be nondecreasing");
    }
    GrowthSpec g;
    g.kind_ = Kind::Table;
    g.table_ = std::move(values);
    return g;
}

GrowthSpec GrowthSpec::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("growth spec needs the form kind:params, got '" +
                                    std::string(text) + "'");
    std::string_view kind = text.substr(0, colon);
    std::string rest{text.substr(colon + 1)};
    if (kind == "linear") return linear(parse_rational(rest));
    if (kind == "power") {
        Rational gamma = parse_rational(rest);
        if (gamma.numerator() != 1 || gamma.denominator() < 2)
            throw std::invalid_argument("power growth supports unit-fraction exponents 1/q only");
        return power_inv(gamma.denominator());
    }
    if (kind == "const") {
        Rational a = parse_rational(rest);
        if (a.denominator() != 1)
            throw std::invalid_argument("constant growth needs an integer value");
        return constant(a.numerator());
    }
    if (kind == "table") {
        std::vector<long long> values;
        std::istringstream in{rest};
        std::string token;
        while (std::getline(in, token, ',')) {
            Rational v = parse_rational(token);
            if (v.denominator() != 1)
                throw std::invalid_argument("growth table entries must be integers");
            values.push_back(v.numerator());
        }
        return table(std::move(values));
    }
    throw std::invalid_argument("unknown growth kind '" + std::string(kind) + "'");
}

std::string GrowthSpec::to_string() const {
    switch (kind_) {
    case Kind::Linear:
        return "linear:" + format_rational(gamma_);
    case Kind::Power:
        return "power:1/" + std::to_string(q_);
    case Kind::Constant:
        return "const:" + std::to_string(a_);
    case Kind::Table: {
        std::string out = "table:";
        for (std::size_t i = 0; i < table_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(table_[i]);
        }
        return out;
    }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Rational g_eval(const GrowthSpec& g, long long n) {
    if (n < 1) throw std::invalid_argument("g is defined on n >= 1");
    Rational raw;
    switch (g.kind()) {
    case GrowthSpec::Kind::Linear:
        raw = g.gamma() * Rational(n);
        break;
    case GrowthSpec::Kind::Power:
        raw = Rational(integer_root(n, g.power_q()));
        break;
    case GrowthSpec::Kind::Constant:
        raw = Rational(g.constant_a());
        break;
    case GrowthSpec::Kind::Table: {
        const auto& v = g.table_values();
        auto idx = static_cast<std::size_t>(
            std::min<long long>(n, static_cast<long long>(v.size())));
        raw = Rational(v[idx - 1]);
        break;
    }
    }
    return std::max(raw, Rational(1));
}

bool g_at_least(const GrowthSpec& g, const BigInt& x, const BigInt& n) {
    switch (g.kind()) {
    case GrowthSpec::Kind::Linear:
        // (p/q) * x >= n  <=>  p*x >= q*n
        return g.gamma().numerator() * x >= g.gamma().denominator() * n;
    case GrowthSpec::Kind::Power:
        // floor(x^(1/q)) >= n  <=>  x >= n^q for integer thresholds n >= 1
        if (n <= 0) return true;
        if (x < 0) return false;
        {
            BigInt need = 1;
            for (long long i = 0; i < g.power_q(); ++i) need *= n;
            return x >= need;
        }
    case GrowthSpec::Kind::Constant:
        return BigInt(g.constant_a()) >= n;
    case GrowthSpec::Kind::Table: {
        if (x < 1) return n <= 0;
        const auto& v = g.table_values();
        BigInt idx = x;
        if (idx > static_cast<long long>(v.size())) idx = static_cast<long long>(v.size());
        return BigInt(v[static_cast<std::size_t>(static_cast<long long>(idx)) - 1]) >= n;
    }
    }
    return false;
}

std::optional<BigInt> ghat_inverse(const GrowthSpec& g, const BigInt& n) {
    // inf over x in {1, 2, ...}; anything reaches a threshold of n <= 0 at once.
    if (n <= 0) return BigInt(1);
    switch (g.kind()) {
    case GrowthSpec::Kind::Linear: {
        // smallest x with p*x >= q*n, i.e. ceil(q*n / p); >= 1 since gamma <= 1
        const BigInt p = g.gamma().numerator();
        const BigInt q = g.gamma().denominator();
        return (q * n + p - 1) / p;
    }
    case GrowthSpec::Kind::Power: {
        BigInt need = 1;
        for (long long i = 0; i < g.power_q(); ++i) need *= n;
        return need;
    }
    case GrowthSpec::Kind::Constant:
        if (BigInt(g.constant_a()) >= n) return BigInt(1);
        return std::nullopt;
    case GrowthSpec::Kind::Table: {
        const auto& v = g.table_values();
        if (n > v.back()) return std::nullopt;
        // n fits in long long here (it is at most the last table entry)
        long long nn = static_cast<long long>(n);
        auto it = std::lower_bound(v.begin(), v.end(), nn);
        return BigInt(static_cast<long long>(it - v.begin()) + 1);
    }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Theorem-4 iteration and the closed forms
// ---------------------------------------------------------------------------

BeanstalkBound beanstalk_complexity_bound(const GrowthSpec& g, long long n) {
    if (n < 1) throw std::invalid_argument("beanstalk bound needs n >= 1");
    BeanstalkBound out;
    out.n = n;
    out.trace.emplace_back(1);
    const BigInt target = n;
    long long steps = 0;
    while (target >= out.trace.back()) {
        std::optional<BigInt> inv = ghat_inverse(g, out.trace.back());
        if (!inv) {
            // h^(C)(1) = INFINITY from this step on; n < INFINITY holds, so the
            // minimum is exactly this step index. The constant law has the
            // strictly better Corollary closed form — use it and say so.
            out.hit_infinity = true;
            if (g.kind() == GrowthSpec::Kind::Constant) {
                out.closed_form_substituted = true;
                out.bound = corollary_bound(g, n); // n is unused by the constant form
            } else {
                out.bound = static_cast<long long>(out.trace.size());
            }
            return out;
        }
        out.trace.push_back(out.trace.back() + *inv);
        if (++steps > kStepCap)
            throw std::runtime_error("h-iteration exceeded the step cap without passing n");
    }
    out.bound = static_cast<long long>(out.trace.size()) - 1;
    return out;
}

long long corollary_bound(const GrowthSpec& g, long long n) {
    switch (g.kind()) {
    case GrowthSpec::Kind::Linear: {
        // ceil(log_{1+1/gamma}(n)): smallest e with ((p+q)/p)^e >= n
        if (n < 1) throw std::invalid_argument("linear closed form needs n >= 1");
        const BigInt p = g.gamma().numerator();
        const BigInt q = g.gamma().denominator();
        BigInt num = 1, den = 1;
        long long e = 0;
        while (num < n * den) {
            num *= (p + q);
            den *= p;
            ++e;
        }
        return e;
    }
    case GrowthSpec::Kind::Power: {
        // floor(log_q(log2 n)) + 1: largest C with 2^(q^C) <= n, plus 1
        if (n < 2) throw std::invalid_argument("power closed form needs n >= 2");
        long long c = 0;
        BigInt qc = g.power_q(); // q^(C+1) for the candidate C+1
        while (qc < 64 && big_pow(2, static_cast<long long>(qc)) <= n) {
            ++c;
            qc *= g.power_q();
        }
        return c + 1;
    }
    case GrowthSpec::Kind::Constant: {
        // ceil(log2 a) + 1: smallest e with 2^e >= a, plus 1
        long long e = 0;
        BigInt pw = 1;
        while (pw < g.constant_a()) {
            pw *= 2;
            ++e;
        }
        return e + 1;
    }
    case GrowthSpec::Kind::Table:
        throw std::invalid_argument("table growth has no closed-form bound");
    }
    throw std::invalid_argument("unknown growth kind");
}

long long simple_iteration_bound(const GrowthSpec& g, long long n) {
    if (n < 2) throw std::invalid_argument("simple iteration bound needs n >= 2");
    long long steps = 0;
    switch (g.kind()) {
    case GrowthSpec::Kind::Linear: {
        // value after s steps is n * p^s / q^s; compare to 2 exactly
        const BigInt p = g.gamma().numerator();
        const BigInt q = g.gamma().denominator();
        BigInt num = n, den = 1;
        while (num >= 2 * den) {
            num *= p;
            den *= q;
            if (++steps > kStepCap)
                throw std::domain_error("iterated g fails to descend below 2");
        }
        return steps;
    }
    case GrowthSpec::Kind::Power: {
        long long m = n;
        while (m >= 2) {
            m = integer_root(m, g.power_q());
            ++steps; // always descends: root of m >= 2 is < m for q >= 2
        }
        return steps;
    }
    case GrowthSpec::Kind::Constant: {
        long long m = n;
        while (m >= 2) {
            m = g.constant_a();
            if (++steps > 2) throw std::domain_error("iterated g fails to descend below 2");
        }
        return steps;
    }
    case GrowthSpec::Kind::Table: {
        const auto& v = g.table_values();
        long long m = n;
        while (m >= 2) {
            m = v[static_cast<std::size_t>(
                    std::min<long long>(m, static_cast<long long>(v.size()))) -
                1];
            if (++steps > kStepCap)
                throw std::domain_error("iterated g fails to descend below 2");
        }
        return steps;
    }
    }
    throw std::invalid_argument("unknown growth kind");
}

} // namespace hein
