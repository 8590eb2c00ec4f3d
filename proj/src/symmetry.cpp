#include "symtract/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace symtract {

SymmetryStructure::SymmetryStructure(uint64_t d, std::vector<Group> groups)
    : d_(d), groups_(std::move(groups)) {
    if (d_ == 0) throw std::invalid_argument("dimension must be positive");
    std::set<uint64_t> seen;
    for (auto& g : groups_) {
        if (g.indices.empty()) throw std::invalid_argument("groups must be non-empty");
        std::sort(g.indices.begin(), g.indices.end());
        for (uint64_t i : g.indices) {
            if (i < 1 || i > d_) throw std::invalid_argument("group index out of range");
            if (!seen.insert(i).second) throw std::invalid_argument("groups must be pairwise disjoint");
        }
    }
    std::sort(groups_.begin(), groups_.end(),
              [](const Group& a, const Group& b) { return a.indices.front() < b.indices.front(); });
    for (uint64_t i = 1; i <= d_; ++i)
        if (!seen.count(i)) free_.push_back(i);

    // singleton groups claim no (anti-)symmetry; fold them into free blocks
    std::vector<Block> blocks;
    for (const auto& g : groups_) {
        if (g.indices.size() < 2) {
            blocks.push_back({BlockKind::Free, g.indices});
        } else {
            blocks.push_back({g.kind == GroupKind::Symmetric ? BlockKind::Symmetric
                                                             : BlockKind::Antisymmetric,
                              g.indices});
        }
    }
    for (uint64_t i : free_) blocks.push_back({BlockKind::Free, {i}});
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.positions.front() < b.positions.front(); });
    blocks_ = std::move(blocks);
}

SymmetryStructure SymmetryStructure::fully_symmetric(uint64_t d) {
    Group g;
    g.kind = GroupKind::Symmetric;
    g.indices.resize(d);
    std::iota(g.indices.begin(), g.indices.end(), 1);
    return SymmetryStructure(d, {std::move(g)});
}

SymmetryStructure SymmetryStructure::fully_antisymmetric(uint64_t d) {
    Group g;
    g.kind = GroupKind::Antisymmetric;
    g.indices.resize(d);
    std::iota(g.indices.begin(), g.indices.end(), 1);
    return SymmetryStructure(d, {std::move(g)});
}

uint64_t SymmetryStructure::grouped_count() const {
    uint64_t n = 0;
    for (const auto& g : groups_) n += g.indices.size();
    return n;
}

bool SymmetryStructure::is_entire() const {
    return std::all_of(groups_.begin(), groups_.end(),
                       [](const Group& g) { return g.indices.size() < 2; });
}

bool SymmetryStructure::is_canonical(const MultiIndex& k) const {
    if (k.size() != d_) return false;
    for (uint64_t v : k)
        if (v < 1) return false;
    for (const auto& g : groups_) {
        for (size_t i = 1; i < g.indices.size(); ++i) {
            uint64_t prev = k[g.indices[i - 1] - 1];
            uint64_t cur = k[g.indices[i] - 1];
            if (g.kind == GroupKind::Symmetric ? cur < prev : cur <= prev) return false;
        }
    }
    return true;
}

void SymmetryStructure::require_canonical(const MultiIndex& k) const {
    if (!is_canonical(k)) {
        std::ostringstream os;
        os << "multi-index violates the group ordering constraints of the canonical set";
        throw InvalidCanonicalIndex(os.str());
    }
}

std::string SymmetryStructure::describe() const {
    std::ostringstream os;
    os << "d=" << d_;
    for (const auto& g : groups_) {
        os << (g.kind == GroupKind::Symmetric ? " sym{" : " asy{");
        for (size_t i = 0; i < g.indices.size(); ++i) os << (i ? "," : "") << g.indices[i];
        os << "}";
    }
    if (!free_.empty()) os << " free=" << free_.size();
    return os.str();
}

int parity(std::span<const uint64_t> perm) {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<uint64_t> multiplicity_vector(const SymmetryStructure& s, size_t group,
                                          const MultiIndex& j) {
    if (j.size() != s.d()) throw std::invalid_argument("multi-index has wrong length");
    const Group& g = s.groups().at(group);
    std::map<uint64_t, uint64_t> freq;
    for (uint64_t pos : g.indices) ++freq[j[pos - 1]];
    std::vector<uint64_t> counts;
    for (auto& [value, c] : freq) counts.push_back(c);
    std::sort(counts.rbegin(), counts.rend());
    counts.resize(g.indices.size(), 0);
    return counts;
}

BigInt multiplicity_factorial(std::span<const uint64_t> counts) {
    BigInt f = 1;
    for (uint64_t c : counts)
        for (uint64_t i = 2; i <= c; ++i) f *= i;
    return f;
}

void SparseCoefficients::add(const MultiIndex& k, double c) {
    if (c == 0.0) return;
    auto [it, fresh] = entries.emplace(k, c);
    if (!fresh && (it->second += c) == 0.0) entries.erase(it);
}

void SparseCoefficients::prune(double rel_eps) {
    double max_abs = 0.0;
    for (const auto& [k, c] : entries) max_abs = std::max(max_abs, std::fabs(c));
    std::erase_if(entries, [&](const auto& e) { return std::fabs(e.second) < rel_eps * max_abs; });
}

double SparseCoefficients::norm2() const {
    double s = 0.0;
    for (const auto& [k, c] : entries) s += c * c;
    return s;
}

void ExactCoefficients::add(const MultiIndex& k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = entries.emplace(k, c);
    if (!fresh && (it->second += c) == 0) entries.erase(it);
}

SparseCoefficients ExactCoefficients::to_float() const {
    SparseCoefficients out;
    double scale = std::sqrt(to_double(scale_sq));
    for (const auto& [k, c] : entries) out.add(k, to_double(c) * scale);
    return out;
}

Rational ExactCoefficients::inner_product_squared(const ExactCoefficients& a,
                                                  const ExactCoefficients& b) {
    Rational s = 0;
    const auto& small = a.entries.size() <= b.entries.size() ? a.entries : b.entries;
    const auto& large = a.entries.size() <= b.entries.size() ? b.entries : a.entries;
    for (const auto& [k, c] : small) {
        auto it = large.find(k);
        if (it != large.end()) s += c * it->second;
    }
    Rational sq = s * s * a.scale_sq * b.scale_sq;
    return s < 0 ? -sq : sq;
}

namespace {

struct GroupPermutations {
    // image arrays over the group's slots, with signs
    std::vector<std::pair<std::vector<uint64_t>, int>> perms;

    explicit GroupPermutations(size_t n) {
        if (n > kMaxEnumeratedGroup)
            throw std::invalid_argument("group too large for permutation enumeration (max 8)");
        std::vector<uint64_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.emplace_back(p, parity(p));
        } while (std::next_permutation(p.begin(), p.end()));
    }
};

template <class Map, class Scale>
Map project_group(const Group& g, const Map& in, const Scale& inv_card) {
    using Coeff = typename Map::mapped_type;
    GroupPermutations gp(g.indices.size());
    bool anti = g.kind == GroupKind::Antisymmetric;
    Map out;
    for (const auto& [j, c] : in) {
        if (j.size() < g.indices.back()) throw std::invalid_argument("multi-index too short for group");
        for (const auto& [perm, sign] : gp.perms) {
            MultiIndex t = j;
            for (size_t slot = 0; slot < perm.size(); ++slot)
                t[g.indices[slot] - 1] = j[g.indices[perm[slot]] - 1];
            Coeff scaled = c * inv_card;
            if (anti && sign < 0) scaled = -scaled;
            auto [it, fresh] = out.emplace(t, scaled);
            if (!fresh) it->second += scaled;
        }
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

}  // namespace

SparseCoefficients project(const SymmetryStructure& s, size_t group, const SparseCoefficients& in) {
    const Group& g = s.groups().at(group);
    SparseCoefficients out;
    out.entries =
        project_group(g, in.entries, 1.0 / std::tgamma(double(g.indices.size()) + 1.0));
    out.prune();
    return out;
}

ExactCoefficients project(const SymmetryStructure& s, size_t group, const ExactCoefficients& in) {
    const Group& g = s.groups().at(group);
    BigInt card = 1;
    for (uint64_t i = 2; i <= g.indices.size(); ++i) card *= i;
    ExactCoefficients out;
    out.scale_sq = in.scale_sq;
    out.entries = project_group(g, in.entries, Rational(1, card));
    return out;
}

SparseCoefficients project_all(const SymmetryStructure& s, const SparseCoefficients& in) {
    SparseCoefficients cur = in;
    for (size_t g = 0; g < s.groups().size(); ++g) cur = project(s, g, cur);
    return cur;
}

ExactCoefficients project_all(const SymmetryStructure& s, const ExactCoefficients& in) {
    ExactCoefficients cur = in;
    for (size_t g = 0; g < s.groups().size(); ++g) cur = project(s, g, cur);
    return cur;
}

ExactCoefficients xi_expansion(const SymmetryStructure& s, const MultiIndex& k) {
    s.require_canonical(k);
    ExactCoefficients e;
    e.add(k, 1);
    e = project_all(s, e);
    // normalization ∏_g #S_g / M_g(k)!
    Rational scale = 1;
    for (size_t g = 0; g < s.groups().size(); ++g) {
        BigInt card = 1;
        for (uint64_t i = 2; i <= s.groups()[g].indices.size(); ++i) card *= i;
        auto mults = multiplicity_vector(s, g, k);
        scale *= Rational(card, multiplicity_factorial(mults));
    }
    e.scale_sq = scale;
    return e;
}

SparseCoefficients xi_expansion_float(const SymmetryStructure& s, const MultiIndex& k) {
    return xi_expansion(s, k).to_float();
}

}  // namespace symtract
