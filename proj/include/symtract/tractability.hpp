#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symtract/complexity.hpp"
#include "symtract/enumeration.hpp"
#include "symtract/spectrum.hpp"
#include "symtract/symmetry.hpp"

namespace symtract {

/// Symbolic rule d ↦ SymmetryStructure. Asymptotic predicates (b_d ∈ O(1),
/// O(ln d), a_d linear) are certified from the rule, never inferred from
/// finite samples.
struct StructureSchedule {
    enum class Rule {
        Entire,              // no constraints, b_d = d
        FullySymmetric,      // one symmetric group {1..d}
        FullyAntisymmetric,  // one antisymmetric group {1..d}
        FixedFree,           // one group of size d-b, b free coordinates
        LogFree,             // b_d = ceil(c·ln d) free coordinates
        GroupedWave,         // two antisymmetric groups of sizes ⌈d/2⌉, ⌊d/2⌋
        ConstantAntisym,     // one antisymmetric group of fixed size a
        LogQuotientAntisym,  // a_d = ceil(d / (alpha·ln d))
    };

    Rule rule = Rule::Entire;
    GroupKind kind = GroupKind::Antisymmetric;  // group kind for FixedFree / LogFree
    double param = 0.0;                         // b, c, a, or alpha

    SymmetryStructure at(uint64_t d) const;

    enum class Growth { Constant, Logarithmic, Linear };
    Growth b_growth() const;
    bool a_linear() const;

    bool entire_rule() const { return rule == Rule::Entire; }
    bool symmetric_groups() const;
    bool antisymmetric_groups() const;
    std::string name() const;
};

const char* to_string(StructureSchedule::Growth g);

struct FRule {
    double c = 1.0;
    double q = 0.0;
    uint64_t operator()(uint64_t d) const;
};

struct SumConditionRow {
    uint64_t d = 0;
    uint64_t f_d = 1;
    double value = 0.0;  // d^{-r} (Σ_{i ≥ f(d)} λ_{d,i}^τ)^{1/τ}
    double error_bound = 0.0;
    bool divergent = false;
};
struct SumConditionResult {
    std::vector<SumConditionRow> rows;
    double sup = 0.0;
    bool any_divergent = false;
};

/// C_τ per d with the f(d)-1 largest eigenvalues omitted; sup over the grid.
SumConditionResult check_sum_condition_abs(const StructureSchedule& sched, const EigenSequence& seq,
                                           double tau, double r, FRule f, uint64_t d_max);
/// Same with eigenvalues normalized by λ_{d,1}.
SumConditionResult check_sum_condition_norm(const StructureSchedule& sched, const EigenSequence& seq,
                                            double tau, double r, FRule f, uint64_t d_max);

/// ln(a_d!)/d ≥ ln ‖λ‖_τ^τ (per antisymmetric group, summed) over a d-range.
struct SufficiencyResult {
    enum class Kind { ShortcutSmallLambda1, HoldsFrom, Fails };
    Kind kind = Kind::Fails;
    uint64_t d0 = 0;  // smallest probed d from which the bound holds throughout
    double rhs = 0.0;
    std::vector<std::pair<uint64_t, double>> lhs_per_d;
};
SufficiencyResult sufficient_antisymmetric(const StructureSchedule& sched, const EigenSequence& seq,
                                           double tau, uint64_t d_min, uint64_t d_max);

/// ln(‖λ‖_τ^τ) − δ ≤ (1/d) Σ_{k ≤ a_d} ln(‖λ‖_τ^τ / λ_k^τ), per d. A schedule
/// violating this for arbitrarily large d cannot be polynomially tractable
/// when λ₁ ≥ 1.
struct NecessaryBoundRow {
    uint64_t d = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};
struct NecessaryBoundResult {
    bool applicable = true;  // false for λ₁ < 1 (sufficiency decides there)
    std::vector<NecessaryBoundRow> rows;
};
NecessaryBoundResult necessary_antisymmetric_bound(const StructureSchedule& sched,
                                                   const EigenSequence& seq, double tau,
                                                   double delta, uint64_t d_min, uint64_t d_max);

enum class Verdict { StrongPolyTract, PolyTractNotStrong, PolyIntractable, Curse, Indeterminate };
const char* to_string(Verdict v);

struct TractabilityReport {
    Verdict verdict = Verdict::Indeterminate;
    ErrorCriterion criterion = ErrorCriterion::Absolute;
    std::string clause;
    std::map<std::string, std::string> witnesses;
};

inline const std::vector<double>& default_tau_grid() {
    static const std::vector<double> grid{0.25, 0.5, 1.0, 2.0, 4.0};
    return grid;
}

TractabilityReport classify(const StructureSchedule& sched, const EigenSequence& seq,
                            ErrorCriterion criterion,
                            const std::vector<double>& tau_grid = default_tau_grid());

/// Both sides of the ordered-tuple estimate for a finite non-increasing μ,
/// by exhaustive summation; exact when every μ entry is rational.
struct AppendixCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    bool exact = false;
    bool equality = false;
};
AppendixCheck verify_appendix_inequality(const std::vector<ExactReal>& mu, uint64_t d, uint64_t V);

struct DegenerateGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FitRow {
    double eps = 0.0;
    uint64_t d = 0;
    uint64_t n = 0;
};
struct FitResult {
    double p_hat = 0.0;
    double q_hat = 0.0;
    double constant = 0.0;
    double residual = 0.0;
};

/// Least-squares fit of ln n against ln(1/ε) and ln d. Advisory only,
/// never a verdict source.
FitResult fit_exponents(std::span<const FitRow> grid);

}  // namespace symtract
