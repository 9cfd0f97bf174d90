#include "rax/rational.hpp"

#include <stdexcept>

namespace rax {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Decimal digits only. Leading zeros are stripped by hand so the big-int
// string constructor cannot misread them as an octal prefix.
BigInt parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("rational: missing digits");
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("rational: bad character '" + std::string(1, c) + "'");
    }
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    BigInt value{std::string(s)};
    return negative ? BigInt(-value) : value;
}

}  // namespace

std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
    const auto s = trim(text);
    if (s.empty()) throw std::invalid_argument("rational: empty");
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_decimal(s));
    BigInt num = parse_decimal(trim(s.substr(0, slash)));
    BigInt den = parse_decimal(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

}  // namespace rax
