#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "symtract/logval.hpp"
#include "symtract/rational.hpp"

namespace symtract {

enum class ValueMode { Float, Rational };

inline const char* to_string(ValueMode m) {
    return m == ValueMode::Float ? "float" : "rational";
}

/// A squared-error threshold, carried in both representations. Counting
/// compares eigenvalue products strictly against this.
struct Threshold {
    LogVal log_t;
    std::optional<Rational> rat_t;

    bool rational() const { return rat_t.has_value(); }

    static Threshold from_eps(const ExactReal& eps, ValueMode mode) {
        Threshold t;
        t.log_t = LogVal::from_linear(eps.value * eps.value);
        if (mode == ValueMode::Rational) {
            const Rational& q = eps.require_exact("eps");
            t.rat_t = q * q;
        }
        return t;
    }
};

/// Result of a counting operation. Counts can be provably infinite
/// (non-vanishing spectra) or too large to enumerate before the horizon.
struct CountValue {
    enum class Kind { Finite, Infinite, HorizonExceeded };
    Kind kind = Kind::Finite;
    uint64_t count = 0;
    bool boundary_tie = false;  // float mode saw a value within the tie window
    std::string note;

    static CountValue finite(uint64_t n) { return {Kind::Finite, n, false, {}}; }
    static CountValue infinite(std::string why) {
        return {Kind::Infinite, 0, false, std::move(why)};
    }
    static CountValue horizon(std::string why) {
        return {Kind::HorizonExceeded, 0, false, std::move(why)};
    }
    bool is_finite() const { return kind == Kind::Finite; }
};

}  // namespace symtract
