#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "symtract/complexity.hpp"

namespace symtract {

/// A problem element in the singular ξ-basis: finitely many coefficients
/// ⟨f, ξ_k⟩ at canonical indices. Unit-ball membership iff Σ c_k² ≤ 1.
struct ProblemElement {
    std::map<MultiIndex, double> coeffs;

    double norm2() const;
    void add(const MultiIndex& k, double c);
};

/// A*_{n,d} in coefficient space: keep the coefficients at the n leading
/// canonical indices of the stream, scaled by √λ_{d,k} (the diagonal action
/// of S_d in the singular basis); drop the rest.
ProblemElement apply_optimal(const Problem& p, const ProblemElement& f, uint64_t n,
                             ValueMode mode = ValueMode::Float);

/// ‖S_d f − A*_{n,d} f‖ = √(Σ_{v>n} c_{ψ(v)}² λ_{d,ψ(v)}), exact.
double residual_error(const Problem& p, const ProblemElement& f, uint64_t n,
                      ValueMode mode = ValueMode::Float);

struct WorstCaseProbe {
    double empirical_max = 0.0;   // max residual over the random trials
    double witness_error = 0.0;   // residual of ξ_{ψ(n+1)}
    double nth_error = 0.0;       // e(n,d)
    std::optional<MultiIndex> witness;  // ψ(n+1); empty when the spectrum is exhausted
};

/// Random unit vectors supported on the first n+32 canonical indices; the
/// maximum residual never exceeds e(n,d), and the witness attains it.
WorstCaseProbe empirical_worst_case(const Problem& p, uint64_t n, uint64_t trials, uint64_t seed,
                                    ValueMode mode = ValueMode::Float);

}  // namespace symtract
