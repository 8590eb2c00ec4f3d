#pragma once

#include <cmath>
#include <limits>

namespace symtract {

/// Non-negative scalar kept in the log domain. Products of many eigenvalues
/// underflow double well before d gets interesting, so all accumulation and
/// threshold comparison happens on ln(x), with ln(0) = -inf.
struct LogVal {
    double lg = -std::numeric_limits<double>::infinity();

    static LogVal zero() { return {}; }
    static LogVal one() { return {0.0}; }
    static LogVal from_linear(double x) {
        return x > 0.0 ? LogVal{std::log(x)} : zero();
    }
    static LogVal from_log(double l) { return LogVal{l}; }

    bool is_zero() const { return std::isinf(lg) && lg < 0; }
    double linear() const { return is_zero() ? 0.0 : std::exp(lg); }

    friend LogVal operator*(LogVal a, LogVal b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return LogVal{a.lg + b.lg};
    }
    LogVal& operator*=(LogVal o) { return *this = *this * o; }
    friend LogVal operator/(LogVal a, LogVal b) { return LogVal{a.lg - b.lg}; }

    LogVal pow(double e) const {
        if (is_zero()) return zero();
        return LogVal{lg * e};
    }

    friend bool operator<(LogVal a, LogVal b) { return a.lg < b.lg; }
    friend bool operator>(LogVal a, LogVal b) { return a.lg > b.lg; }
    friend bool operator==(LogVal a, LogVal b) {
        return a.lg == b.lg || (a.is_zero() && b.is_zero());
    }
};

/// Strict "a > b" with a reported near-tie: in float mode an equality within
/// tie_eps (log domain) is treated as "not greater" and flagged, since the
/// counting definition is a strict inequality.
struct StrictCompare {
    double tie_eps = 1e-12;
    mutable bool tie_seen = false;

    bool greater(LogVal a, LogVal b) const {
        if (a.is_zero()) return false;
        if (b.is_zero()) return true;
        double diff = a.lg - b.lg;
        if (std::fabs(diff) <= tie_eps) {
            tie_seen = true;
            return false;
        }
        return diff > 0;
    }
};

}  // namespace symtract
