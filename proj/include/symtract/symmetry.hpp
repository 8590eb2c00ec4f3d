#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symtract/rational.hpp"

namespace symtract {

/// d-tuple of positive integers, 1-based entries.
using MultiIndex = std::vector<uint64_t>;

enum class GroupKind { Symmetric, Antisymmetric };

struct Group {
    std::vector<uint64_t> indices;  // sorted coordinates in {1..d}
    GroupKind kind = GroupKind::Symmetric;
};

struct InvalidCanonicalIndex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dimension d plus disjoint coordinate groups, each tagged symmetric or
/// antisymmetric; ungrouped coordinates are free.
class SymmetryStructure {
  public:
    SymmetryStructure(uint64_t d, std::vector<Group> groups);

    static SymmetryStructure entire(uint64_t d) { return SymmetryStructure(d, {}); }
    static SymmetryStructure fully_symmetric(uint64_t d);
    static SymmetryStructure fully_antisymmetric(uint64_t d);

    uint64_t d() const { return d_; }
    const std::vector<Group>& groups() const { return groups_; }
    const std::vector<uint64_t>& free_coords() const { return free_; }

    uint64_t grouped_count() const;               // Σ group sizes
    uint64_t free_count() const { return free_.size(); }  // b_d

    /// True when no group has size >= 2, i.e. no effective constraint.
    bool is_entire() const;

    /// Enumeration blocks in canonical order: groups (size >= 2) plus one
    /// block per free or singleton coordinate.
    enum class BlockKind { Symmetric, Antisymmetric, Free };
    struct Block {
        BlockKind kind;
        std::vector<uint64_t> positions;  // original coordinates, ascending
    };
    const std::vector<Block>& blocks() const { return blocks_; }

    bool is_canonical(const MultiIndex& k) const;
    void require_canonical(const MultiIndex& k) const;  // throws InvalidCanonicalIndex

    std::string describe() const;

  private:
    uint64_t d_;
    std::vector<Group> groups_;
    std::vector<uint64_t> free_;
    std::vector<Block> blocks_;
};

/// Sign of a permutation given as an image array (perm[i] = image of slot i).
int parity(std::span<const uint64_t> perm);

/// M_I(j): occurrence counts of the distinct values of j on the group's
/// coordinates, sorted non-increasing and zero-padded to the group size.
std::vector<uint64_t> multiplicity_vector(const SymmetryStructure& s, size_t group,
                                          const MultiIndex& j);

/// ∏ c! over a multiplicity vector.
BigInt multiplicity_factorial(std::span<const uint64_t> counts);

/// Finitely supported coefficient vectors over the η tensor basis.
struct SparseCoefficients {
    std::map<MultiIndex, double> entries;

    void add(const MultiIndex& k, double c);
    void prune(double rel_eps = 1e-15);  // exact-cancellation surrogate for floats
    double norm2() const;
};

/// Exact flavor: every coefficient is entries[k]·√scale_sq with a common
/// rational scale, so projector algebra and inner products stay rational.
struct ExactCoefficients {
    Rational scale_sq = 1;
    std::map<MultiIndex, Rational> entries;

    void add(const MultiIndex& k, const Rational& c);
    SparseCoefficients to_float() const;

    /// ⟨a,b⟩² with sign, as a rational: sign(s)·s²·scaleA·scaleB for s = Σ aᵢbᵢ.
    static Rational inner_product_squared(const ExactCoefficients& a, const ExactCoefficients& b);
};

/// Applies one group's (anti-)symmetrizer to the coefficient expansion:
/// each index j is replaced by the signed average over σ(j), σ ∈ S_I.
SparseCoefficients project(const SymmetryStructure& s, size_t group, const SparseCoefficients& in);
ExactCoefficients project(const SymmetryStructure& s, size_t group, const ExactCoefficients& in);

/// All group projectors in sequence (they commute across disjoint groups).
SparseCoefficients project_all(const SymmetryStructure& s, const SparseCoefficients& in);
ExactCoefficients project_all(const SymmetryStructure& s, const ExactCoefficients& in);

/// ξ_k = ∏_g √(#S_g / M_g(k)!) · (∏_g P_g)(η_k) for canonical k; exact.
ExactCoefficients xi_expansion(const SymmetryStructure& s, const MultiIndex& k);
SparseCoefficients xi_expansion_float(const SymmetryStructure& s, const MultiIndex& k);

constexpr uint64_t kMaxEnumeratedGroup = 8;  // #S_I = (#I)! enumeration guard

}  // namespace symtract
