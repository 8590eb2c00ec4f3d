#include "symtract/optimal.hpp"

#include <cmath>
#include <random>
#include <set>

namespace symtract {

double ProblemElement::norm2() const {
    double s = 0.0;
    for (const auto& [k, c] : coeffs) s += c * c;
    return s;
}

void ProblemElement::add(const MultiIndex& k, double c) {
    if (c == 0.0) return;
    auto [it, fresh] = coeffs.emplace(k, c);
    if (!fresh && (it->second += c) == 0.0) coeffs.erase(it);
}

namespace {

double lambda_of(const EigenSequence& seq, const MultiIndex& k) {
    double lg = 0.0;
    for (uint64_t v : k) lg += seq.log_value(v);
    return std::exp(lg);
}

std::set<MultiIndex> leading_indices(const Problem& p, uint64_t n, ValueMode mode) {
    std::set<MultiIndex> top;
    for (auto& item : top_eigenvalues(p.structure, p.seq, n, mode)) top.insert(item.index);
    return top;
}

}  // namespace

ProblemElement apply_optimal(const Problem& p, const ProblemElement& f, uint64_t n, ValueMode mode) {
    auto top = leading_indices(p, n, mode);
    ProblemElement out;
    for (const auto& [k, c] : f.coeffs) {
        p.structure.require_canonical(k);
        if (top.count(k)) out.add(k, c * std::sqrt(lambda_of(p.seq, k)));
    }
    return out;
}

double residual_error(const Problem& p, const ProblemElement& f, uint64_t n, ValueMode mode) {
    auto top = leading_indices(p, n, mode);
    double s = 0.0;
    for (const auto& [k, c] : f.coeffs) {
        p.structure.require_canonical(k);
        if (!top.count(k)) s += c * c * lambda_of(p.seq, k);
    }
    return std::sqrt(s);
}

WorstCaseProbe empirical_worst_case(const Problem& p, uint64_t n, uint64_t trials, uint64_t seed,
                                    ValueMode mode) {
    if (trials == 0) throw std::invalid_argument("at least one trial required");
    auto window = top_eigenvalues(p.structure, p.seq, n + 33, mode);

    WorstCaseProbe probe;
    if (window.size() > n) {
        probe.witness = window[n].index;
        probe.witness_error = std::exp(0.5 * window[n].log_value);
    }
    probe.nth_error = nth_minimal_error(p, n, mode);

    // residual over the window needs only the tail values λ_{d,ψ(v)}, v > n
    std::vector<double> tail_values;
    for (uint64_t v = n; v < window.size(); ++v)
        tail_values.push_back(std::exp(window[v].log_value));

    const size_t W = window.size();
    std::vector<double> coeff(W);
    for (uint64_t trial = 0; trial < trials; ++trial) {
        // per-trial independent stream derived from the seed
        std::mt19937_64 eng(seed + 0x9E3779B97F4A7C15ULL * (trial + 1));
        std::normal_distribution<double> normal;
        double norm2 = 0.0;
        for (size_t i = 0; i < W; ++i) {
            coeff[i] = normal(eng);
            norm2 += coeff[i] * coeff[i];
        }
        if (norm2 == 0.0) continue;
        double res2 = 0.0;
        for (size_t i = n; i < W; ++i) res2 += coeff[i] * coeff[i] * tail_values[i - n];
        probe.empirical_max = std::max(probe.empirical_max, std::sqrt(res2 / norm2));
    }
    return probe;
}

}  // namespace symtract
