#pragma once

#include <cstdint>
#include <stdexcept>

#include "symtract/enumeration.hpp"
#include "symtract/spectrum.hpp"
#include "symtract/symmetry.hpp"
#include "symtract/threshold.hpp"

namespace symtract {

/// A linear tensor product problem restricted to an (anti-)symmetric subspace,
/// described entirely by the univariate eigenvalues and the group structure.
struct Problem {
    SymmetryStructure structure;
    EigenSequence seq;
};

enum class ErrorCriterion { Absolute, Normalized };

/// ln λ_{d,ψ(1)}: an antisymmetric group of size a contributes λ₁⋯λ_a,
/// a symmetric group of size a contributes λ₁^a, free coordinates λ₁ each.
double log_initial_error_sq(const Problem& p);
double initial_error(const Problem& p);  // √λ_{d,ψ(1)}
Rational initial_error_sq_exact(const Problem& p);

/// e(n,d) = √λ_{d,ψ(n+1)}; 0 when fewer than n+1 positive eigenvalues exist.
double nth_minimal_error(const Problem& p, uint64_t n, ValueMode mode = ValueMode::Float);

/// Minimal number of linear functionals for error ≤ ε (absolute) or
/// ≤ ε′·ε_init (normalized, ε′ < 1): the count of eigenvalues strictly
/// above the squared threshold.
CountValue info_complexity(const Problem& p, const ExactReal& eps, ErrorCriterion criterion,
                           ValueMode mode = ValueMode::Float, const EnumLimits& limits = {});

struct NoFiniteIndex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// i_d(δ²) = min{i : λ_i⋯λ_{i+d-1} ≤ δ²}. Throws NoFiniteIndex past the horizon.
uint64_t i_index(const EigenSequence& seq, uint64_t d, const ExactReal& delta_sq,
                 ValueMode mode = ValueMode::Float,
                 uint64_t horizon = EigenSequence::kDefaultHorizon);

/// Fully antisymmetric information complexity by the nested-sum recursion
/// over i_j pivots; must agree with count_above on the same inputs.
CountValue exact_antisymmetric_count(const EigenSequence& seq, uint64_t d, const ExactReal& eps,
                                     ValueMode mode = ValueMode::Float,
                                     const EnumLimits& limits = {});
CountValue exact_antisymmetric_count_threshold(const EigenSequence& seq, uint64_t d,
                                               const Threshold& t, const EnumLimits& limits = {});

enum class FullKind { Entire, Symmetric, Antisymmetric };

/// Closed forms for λ = (1,…,1,0,…) with m ones and ε < 1:
/// entire m^d, antisymmetric C(m,d)·[d≤m], symmetric C(m+d-1,d).
uint64_t closed_form_finite_rank(uint64_t m, uint64_t d, FullKind kind, double eps);

}  // namespace symtract
