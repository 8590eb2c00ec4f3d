#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symtract/rational.hpp"
#include "symtract/threshold.hpp"

namespace symtract {

enum class Family { FiniteRank, PowerDecay, ShiftedPower, Geometric, LogDecay, Explicit };

enum class TailRule { Zero, Geometric, Constant };

struct ExplicitTail {
    TailRule rule = TailRule::Zero;
    ExactReal param;  // ratio for Geometric, value for Constant
};

/// Σ_{m>=start} λ_m^τ with a certified truncation bound. Divergent sums are
/// reported, not thrown; the caller decides whether that is an error.
struct PowerSumResult {
    double value = 0.0;  // +inf when divergent
    double error_bound = 0.0;
    bool divergent = false;

    static PowerSumResult diverged() {
        return {std::numeric_limits<double>::infinity(), 0.0, true};
    }
};

/// The univariate non-increasing eigenvalue sequence λ of W₁ = S₁†S₁,
/// given as a closed-form family or a finite list. λ₁ > 0 always.
class EigenSequence {
  public:
    static EigenSequence finite_rank(std::vector<ExactReal> values);
    static EigenSequence power_decay(double alpha);              // λ_m = m^(-2α)
    static EigenSequence shifted_power(double beta);             // λ₁ = 1, λ_{j+1} = j^(-β)
    static EigenSequence geometric(ExactReal ratio, ExactReal scale);  // λ_m = c·r^(m-1)
    static EigenSequence log_decay();                            // λ_m = 1/ln(m+1)
    static EigenSequence explicit_list(std::vector<ExactReal> values, ExplicitTail tail);

    Family family() const { return family_; }
    std::string describe() const;

    double value(uint64_t m) const;      // λ_m, m >= 1
    double log_value(uint64_t m) const;  // ln λ_m, -inf for zero

    bool rational_capable() const { return rational_ok_; }
    Rational rational_value(uint64_t m) const;

    /// Largest m with λ_m possibly nonzero; 0 means infinite support.
    uint64_t finite_rank_bound() const;
    bool tends_to_zero() const;

    /// lim_{m→∞} λ_m; nonzero only for non-compact tails.
    ExactReal tail_limit() const;

    /// λ ∈ ℓ_τ exactly for τ above (or at) a family-specific threshold.
    struct Summability {
        std::optional<double> tau_threshold;  // nullopt: λ ∉ ℓ_τ for every τ
        bool threshold_included = false;
    };
    Summability summability() const;
    bool in_ell_tau(double tau) const;

    PowerSumResult power_sum(double tau, uint64_t start = 1) const;

    /// Smallest τ in the (increasing) grid with λ ∈ ℓ_τ.
    std::optional<double> find_tau_membership(std::span<const double> grid) const;

    /// #{m : λ_m > t}. Exact boundary handling per mode.
    CountValue count_above(const Threshold& t, uint64_t horizon = kDefaultHorizon) const;

    static constexpr uint64_t kDefaultHorizon = 1'000'000;

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

  private:
    EigenSequence() = default;

    Family family_ = Family::FiniteRank;
    std::vector<ExactReal> values_;  // list families
    ExplicitTail tail_;
    double alpha_ = 0.0;  // PowerDecay
    double beta_ = 0.0;   // ShiftedPower
    ExactReal ratio_, scale_;
    bool rational_ok_ = false;

    void validate_list() const;
};

}  // namespace symtract
