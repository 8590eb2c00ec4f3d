#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symtract {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rational_pow(const Rational& base, uint64_t e) {
    Rational acc = 1;
    Rational b = base;
    uint64_t n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

/// Parses "p/q", integers, and decimal strings ("0.3" -> 3/10, "2.5e-3" -> 1/400).
inline Rational parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    }
    bool neg = false;
    size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    int64_t exp10 = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("bad rational literal: " + text);
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            exp10 += std::stoll(s.substr(pos + 1));
            break;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) --exp10;
        } else {
            throw std::invalid_argument("bad rational literal: " + text);
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad rational literal: " + text);
    BigInt mantissa(digits);
    Rational r(mantissa);
    if (exp10 > 0)
        r *= rational_pow(Rational(10), static_cast<uint64_t>(exp10));
    else if (exp10 < 0)
        r /= rational_pow(Rational(10), static_cast<uint64_t>(-exp10));
    return neg ? -r : r;
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

/// A real-valued input that is exact when a rational representation was given.
struct ExactReal {
    double value = 0.0;
    std::optional<Rational> exact;

    ExactReal() = default;
    ExactReal(double v) : value(v) {}  // NOLINT: implicit by design
    ExactReal(double v, Rational q) : value(v), exact(std::move(q)) {}

    static ExactReal from_string(const std::string& s) {
        Rational q = parse_rational(s);
        return ExactReal(to_double(q), q);
    }
    static ExactReal from_double(double v) { return ExactReal(v); }

    const Rational& require_exact(const char* what) const {
        if (!exact) throw std::invalid_argument(std::string(what) + ": exact rational value required");
        return *exact;
    }
};

}  // namespace symtract
