#include "heintree/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace hein {

namespace {

long long parse_ll(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    long long value = 0;
    bool negative = s[0] == '-';
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad digit in number: '" + std::string(s) + "'");
        int d = s[i] - '0';
        if (value > (0x7fffffffffffffffLL - d) / 10)
            throw std::invalid_argument("number out of range: '" + std::string(s) + "'");
        value = value * 10 + d;
    }
    return negative ? -value : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        long long num = parse_ll(text.substr(0, slash));
        long long den = parse_ll(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        return {num, den};
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) throw std::invalid_argument("trailing decimal point: '" + std::string(text) + "'");
        bool negative = !whole.empty() && whole[0] == '-';
        long long w = whole.empty() || whole == "-" || whole == "+" ? 0 : parse_ll(whole);
        long long den = 1;
        long long num = 0;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad digit in decimal: '" + std::string(text) + "'");
            if (den > 0x7fffffffffffffffLL / 10)
                throw std::invalid_argument("decimal too long: '" + std::string(text) + "'");
            den *= 10;
            num = num * 10 + (c - '0');
        }
        long long mag = (w < 0 ? -w : w);
        Rational r = Rational(mag) + Rational(num, den);
        return negative ? -r : r;
    }
    return Rational(parse_ll(text));
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace hein
