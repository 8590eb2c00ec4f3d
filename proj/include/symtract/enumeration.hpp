#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "symtract/spectrum.hpp"
#include "symtract/symmetry.hpp"
#include "symtract/threshold.hpp"

namespace symtract {

struct SpectrumItem {
    MultiIndex index;  // canonical, original coordinate order
    double value = 0.0;
    double log_value = 0.0;
    std::optional<Rational> exact;
};

struct EnumLimits {
    uint64_t value_horizon = EigenSequence::kDefaultHorizon;  // per-coordinate index probe limit
    uint64_t leaf_budget = 50'000'000;                        // DFS work guard
};

/// Lazy non-increasing enumeration of {λ_{d,k} : k ∈ ∇_d}, realizing the
/// rearrangement ψ with lexicographic tie-break. Only strictly positive
/// eigenvalues are emitted; each canonical index appears exactly once.
///
/// Uses best-first search over a spanning forest of the canonical lattice:
/// each index has exactly one parent (decrement the rightmost coordinate that
/// sits above its minimal admissible value), so no visited-set is needed, and
/// values are non-increasing along edges because λ is non-increasing.
class SpectrumStream {
  public:
    SpectrumStream(const SymmetryStructure& s, const EigenSequence& seq, ValueMode mode);
    ~SpectrumStream();
    SpectrumStream(SpectrumStream&&) noexcept;
    SpectrumStream& operator=(SpectrumStream&&) noexcept;

    std::optional<SpectrumItem> next();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// The n largest eigenvalues of W_d restricted to the (anti-)symmetric
/// subspace, in non-increasing order with canonical indices.
std::vector<SpectrumItem> top_eigenvalues(const SymmetryStructure& s, const EigenSequence& seq,
                                          uint64_t n, ValueMode mode = ValueMode::Float);

/// #{k ∈ ∇_d : λ_{d,k} > t}, by depth-first search in group-canonical order
/// with monotone pruning.
CountValue count_above_threshold(const SymmetryStructure& s, const EigenSequence& seq,
                                 const Threshold& t, const EnumLimits& limits = {});
CountValue count_above(const SymmetryStructure& s, const EigenSequence& seq, const ExactReal& eps,
                       ValueMode mode = ValueMode::Float, const EnumLimits& limits = {});

/// Exhaustive oracle over the truncation cube ∇_d ∩ {1..s}^d. `certified`
/// means no index outside the cube can exceed the threshold, so the count
/// equals the full one.
struct BruteForceCount {
    uint64_t count = 0;
    bool certified = false;
    bool boundary_tie = false;
};
BruteForceCount brute_force_count(const SymmetryStructure& s, const EigenSequence& seq,
                                  const ExactReal& eps, uint64_t cube, ValueMode mode = ValueMode::Float);

/// Σ_{k∈∇_d} λ_{d,k}^τ as a product over blocks: elementary symmetric e_a for
/// an antisymmetric group, complete homogeneous h_a for a symmetric one,
/// (Σ λ^τ)^b for free coordinates. Infinite families go through power sums
/// p_j = Σ λ_m^{jτ} and Newton's identities with propagated error bounds.
struct SpectralSum {
    double value = 0.0;
    double error_bound = 0.0;
    bool divergent = false;
};
SpectralSum spectral_sum(const SymmetryStructure& s, const EigenSequence& seq, double tau);

}  // namespace symtract
