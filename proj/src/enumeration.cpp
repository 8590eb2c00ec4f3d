#include "symtract/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <variant>

namespace symtract {

namespace {

using Block = SymmetryStructure::Block;
using BlockKind = SymmetryStructure::BlockKind;

struct FloatMode {
    using Num = LogVal;
    static Num lambda(const EigenSequence& s, uint64_t m) {
        return LogVal::from_log(s.log_value(m));
    }
    static Num one() { return LogVal::one(); }
    static Num from_limit(const ExactReal& x) { return LogVal::from_linear(x.value); }
    static bool heap_less(const Num& a, const Num& b) { return a.lg < b.lg; }
};

struct RationalMode {
    using Num = Rational;
    static Num lambda(const EigenSequence& s, uint64_t m) { return s.rational_value(m); }
    static Num one() { return Rational(1); }
    static Num from_limit(const ExactReal& x) { return x.require_exact("tail limit"); }
    static bool heap_less(const Num& a, const Num& b) { return a < b; }
};

template <class Num>
bool num_is_zero(const Num& x) {
    if constexpr (std::is_same_v<Num, LogVal>)
        return x.is_zero();
    else
        return x == 0;
}

// strict ">" against the threshold; float mode flags near-ties
template <class Num>
bool num_greater(const Num& a, const Num& t, const StrictCompare& cmp) {
    if constexpr (std::is_same_v<Num, LogVal>)
        return cmp.greater(a, t);
    else
        return a > t;
}

template <class M>
typename M::Num threshold_of(const Threshold& t) {
    if constexpr (std::is_same_v<M, FloatMode>)
        return t.log_t;
    else
        return *t.rat_t;
}

uint64_t slot_min(const Block& b, size_t slot, uint64_t prev) {
    if (slot == 0) return 1;
    return b.kind == BlockKind::Antisymmetric ? prev + 1 : prev;
}

// ---------------------------------------------------------------------------
// lazy stream

template <class M>
struct StreamImpl {
    using Num = typename M::Num;

    EigenSequence seq;
    std::vector<Block> blocks;
    uint64_t d;

    struct Node {
        Num value;
        MultiIndex idx;  // original coordinate order
    };
    struct ByValueThenLex {
        bool operator()(const Node& a, const Node& b) const {
            if (!(a.value == b.value)) return M::heap_less(a.value, b.value);
            return a.idx > b.idx;  // equal values: smaller index on top
        }
    };
    std::priority_queue<Node, std::vector<Node>, ByValueThenLex> heap;

    Num value_of(const MultiIndex& idx) const {
        Num prod = M::one();
        for (uint64_t v : idx) prod = prod * M::lambda(seq, v);
        return prod;
    }

    StreamImpl(const SymmetryStructure& s, const EigenSequence& sq) : seq(sq) {
        blocks = s.blocks();
        d = s.d();
        Node root;
        root.idx.assign(d, 1);
        for (const auto& b : blocks)
            if (b.kind == BlockKind::Antisymmetric)
                for (size_t i = 0; i < b.positions.size(); ++i)
                    root.idx[b.positions[i] - 1] = i + 1;
        root.value = value_of(root.idx);
        if (!num_is_zero(root.value)) heap.push(std::move(root));
    }

    // Children: bump the coordinate at slot p by one (shifting the rest of
    // p's block to keep it canonical) for every p at or after the last slot
    // that sits above its minimal admissible value. Each index is reachable
    // from exactly one parent this way, and values are non-increasing along
    // the edges, so a plain best-first pop realizes ψ.
    void push_children(const Node& n) {
        size_t last_raised = 0;
        size_t slot = 0;
        for (const auto& b : blocks) {
            uint64_t prev = 0;
            for (size_t i = 0; i < b.positions.size(); ++i, ++slot) {
                uint64_t v = n.idx[b.positions[i] - 1];
                if (v != slot_min(b, i, prev)) last_raised = slot;
                prev = v;
            }
        }
        slot = 0;
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            const auto& b = blocks[bi];
            for (size_t i = 0; i < b.positions.size(); ++i, ++slot) {
                if (slot < last_raised) continue;
                Node child;
                child.idx = n.idx;
                for (size_t j = i; j < b.positions.size(); ++j) child.idx[b.positions[j] - 1] += 1;
                child.value = value_of(child.idx);
                if (!num_is_zero(child.value)) heap.push(std::move(child));
            }
        }
    }

    std::optional<SpectrumItem> next() {
        if (heap.empty()) return std::nullopt;
        Node top = heap.top();
        heap.pop();
        push_children(top);
        SpectrumItem item;
        item.index = top.idx;
        double lg = 0.0;
        for (uint64_t v : item.index) lg += seq.log_value(v);
        item.log_value = lg;
        if constexpr (std::is_same_v<M, FloatMode>) {
            item.value = std::exp(top.value.lg);
        } else {
            item.exact = top.value;
            item.value = to_double(top.value);
        }
        return item;
    }
};

// ---------------------------------------------------------------------------
// pruned counting

enum class DfsStatus { Ok, Infinite, Horizon };

template <class M>
struct Counter {
    using Num = typename M::Num;

    const EigenSequence& seq;
    std::vector<Block> blocks;
    Num threshold;
    StrictCompare cmp;
    EnumLimits limits;
    Num tail_lim;
    bool has_tail_lim = false;
    std::vector<Num> suffix_best;  // over blocks bi.., 1 past the end
    uint64_t count = 0;
    uint64_t steps = 0;
    std::string note;

    Counter(const SymmetryStructure& s, const EigenSequence& sq, Num thr, EnumLimits lim)
        : seq(sq), blocks(s.blocks()), threshold(std::move(thr)), limits(lim) {
        ExactReal L = seq.tail_limit();
        if (L.value > 0.0) {
            tail_lim = M::from_limit(L);
            has_tail_lim = true;
        }
        suffix_best.assign(blocks.size() + 1, M::one());
        for (size_t bi = blocks.size(); bi-- > 0;)
            suffix_best[bi] = block_best(blocks[bi]) * suffix_best[bi + 1];
    }

    Num block_best(const Block& b) const {
        Num prod = M::one();
        for (size_t i = 0; i < b.positions.size(); ++i) {
            uint64_t m = b.kind == BlockKind::Antisymmetric ? i + 1 : 1;
            prod = prod * M::lambda(seq, m);
        }
        return prod;
    }

    bool above(const Num& x) const { return num_greater(x, threshold, cmp); }

    // best completion of the r slots after the current one within the block,
    // given the current slot takes value v
    Num completion(const Block& b, uint64_t v, size_t r) const {
        Num prod = M::one();
        for (size_t i = 1; i <= r; ++i) {
            uint64_t m = b.kind == BlockKind::Antisymmetric ? v + i : v;
            prod = prod * M::lambda(seq, m);
        }
        return prod;
    }

    DfsStatus dfs(size_t bi, size_t slot, uint64_t vmin, const Num& partial) {
        const Block& b = blocks[bi];
        size_t r = b.positions.size() - slot - 1;
        bool last_block = bi + 1 == blocks.size();

        if (has_tail_lim) {
            // non-vanishing tail: if the limit completion clears the
            // threshold, every large v yields admissible indices
            Num lim = partial * suffix_best[bi + 1];
            for (size_t i = 0; i <= r; ++i) lim = lim * tail_lim;
            if (above(lim)) {
                note = "spectrum does not decay below the threshold";
                return DfsStatus::Infinite;
            }
        }

        for (uint64_t v = vmin;; ++v) {
            if (++steps > limits.leaf_budget) {
                note = "leaf budget exhausted before the count completed";
                return DfsStatus::Horizon;
            }
            if (v - vmin >= limits.value_horizon) {
                note = "per-coordinate horizon reached before the count completed";
                return DfsStatus::Horizon;
            }
            Num lv = M::lambda(seq, v);
            if (num_is_zero(lv)) break;
            Num with_v = partial * lv;
            Num bound = with_v * completion(b, v, r) * suffix_best[bi + 1];
            if (!above(bound)) break;  // monotone in v: larger v only shrinks
            if (r > 0) {
                auto st = dfs(bi, slot + 1, slot_min(b, slot + 1, v), with_v);
                if (st != DfsStatus::Ok) return st;
            } else if (!last_block) {
                auto st = dfs(bi + 1, 0, 1, with_v);
                if (st != DfsStatus::Ok) return st;
            } else {
                ++count;  // bound == value at the last slot
            }
        }
        return DfsStatus::Ok;
    }

    CountValue run() {
        DfsStatus st = dfs(0, 0, 1, M::one());
        CountValue out;
        switch (st) {
            case DfsStatus::Ok:
                out = CountValue::finite(count);
                break;
            case DfsStatus::Infinite:
                out = CountValue::infinite(note);
                break;
            case DfsStatus::Horizon:
                out = CountValue::horizon(note);
                break;
        }
        out.boundary_tie = cmp.tie_seen;
        return out;
    }
};

// ---------------------------------------------------------------------------
// cube oracle

template <class M>
struct CubeOracle {
    using Num = typename M::Num;

    const EigenSequence& seq;
    std::vector<Block> blocks;
    Num threshold;
    uint64_t cube;
    StrictCompare cmp;
    uint64_t count = 0;

    void rec(size_t bi, size_t slot, uint64_t vmin, const Num& partial) {
        if (bi == blocks.size()) {
            if (num_greater(partial, threshold, cmp)) ++count;
            return;
        }
        const Block& b = blocks[bi];
        for (uint64_t v = vmin; v <= cube; ++v) {
            Num with_v = partial * M::lambda(seq, v);
            if (slot + 1 < b.positions.size())
                rec(bi, slot + 1, slot_min(b, slot + 1, v), with_v);
            else
                rec(bi + 1, 0, 1, with_v);
        }
    }
};

template <class M>
BruteForceCount brute_force_impl(const SymmetryStructure& s, const EigenSequence& seq,
                                 const Threshold& t, uint64_t cube) {
    CubeOracle<M> oracle{seq, s.blocks(), threshold_of<M>(t), cube};
    oracle.rec(0, 0, 1, M::one());
    BruteForceCount out;
    out.count = oracle.count;
    out.boundary_tie = oracle.cmp.tie_seen;
    // complete iff nothing outside the cube can exceed the threshold:
    // any escaping index has product <= λ_cube · λ_1^{d-1}
    typename M::Num escape = M::lambda(seq, cube);
    for (uint64_t i = 1; i < s.d(); ++i) escape = escape * M::lambda(seq, 1);
    StrictCompare cert_cmp;
    out.certified = !num_greater(escape, threshold_of<M>(t), cert_cmp);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

struct SpectrumStream::Impl {
    std::variant<StreamImpl<FloatMode>, StreamImpl<RationalMode>> v;
    template <class T>
    explicit Impl(T&& x) : v(std::forward<T>(x)) {}
};

SpectrumStream::SpectrumStream(const SymmetryStructure& s, const EigenSequence& seq, ValueMode mode) {
    if (mode == ValueMode::Rational && !seq.rational_capable())
        throw std::invalid_argument("rational mode requires a rational family");
    if (mode == ValueMode::Float)
        impl_ = std::make_unique<Impl>(StreamImpl<FloatMode>(s, seq));
    else
        impl_ = std::make_unique<Impl>(StreamImpl<RationalMode>(s, seq));
}

SpectrumStream::~SpectrumStream() = default;
SpectrumStream::SpectrumStream(SpectrumStream&&) noexcept = default;
SpectrumStream& SpectrumStream::operator=(SpectrumStream&&) noexcept = default;

std::optional<SpectrumItem> SpectrumStream::next() {
    return std::visit([](auto& s) { return s.next(); }, impl_->v);
}

std::vector<SpectrumItem> top_eigenvalues(const SymmetryStructure& s, const EigenSequence& seq,
                                          uint64_t n, ValueMode mode) {
    SpectrumStream stream(s, seq, mode);
    std::vector<SpectrumItem> out;
    out.reserve(n);
    for (uint64_t i = 0; i < n; ++i) {
        auto item = stream.next();
        if (!item) break;
        out.push_back(std::move(*item));
    }
    return out;
}

CountValue count_above_threshold(const SymmetryStructure& s, const EigenSequence& seq,
                                 const Threshold& t, const EnumLimits& limits) {
    if (t.rational()) {
        Counter<RationalMode> c(s, seq, *t.rat_t, limits);
        return c.run();
    }
    Counter<FloatMode> c(s, seq, t.log_t, limits);
    return c.run();
}

CountValue count_above(const SymmetryStructure& s, const EigenSequence& seq, const ExactReal& eps,
                       ValueMode mode, const EnumLimits& limits) {
    if (!(eps.value > 0.0)) throw std::invalid_argument("eps must be positive");
    return count_above_threshold(s, seq, Threshold::from_eps(eps, mode), limits);
}

BruteForceCount brute_force_count(const SymmetryStructure& s, const EigenSequence& seq,
                                  const ExactReal& eps, uint64_t cube, ValueMode mode) {
    if (cube < s.d()) throw std::invalid_argument("cube bound must be at least d");
    Threshold t = Threshold::from_eps(eps, mode);
    if (t.rational()) return brute_force_impl<RationalMode>(s, seq, t, cube);
    return brute_force_impl<FloatMode>(s, seq, t, cube);
}

// ---------------------------------------------------------------------------
// spectral sums

namespace {

struct ValErr {
    double v = 0.0, e = 0.0;
    friend ValErr operator+(ValErr a, ValErr b) { return {a.v + b.v, a.e + b.e}; }
    friend ValErr operator-(ValErr a, ValErr b) { return {a.v - b.v, a.e + b.e}; }
    friend ValErr operator*(ValErr a, ValErr b) {
        return {a.v * b.v, std::fabs(a.v) * b.e + std::fabs(b.v) * a.e + a.e * b.e};
    }
    ValErr scaled(double c) const { return {v * c, e * std::fabs(c)}; }
};

ValErr pow_valerr(ValErr x, uint64_t n) {
    ValErr acc{1.0, 0.0};
    for (uint64_t i = 0; i < n; ++i) acc = acc * x;
    return acc;
}

// elementary symmetric e_a of a finite value list, exact recurrence
double elementary_finite(const std::vector<double>& xs, uint64_t a) {
    std::vector<double> e(a + 1, 0.0);
    e[0] = 1.0;
    for (double x : xs)
        for (uint64_t j = std::min<uint64_t>(a, xs.size()); j >= 1; --j) e[j] += x * e[j - 1];
    return e[a];
}

double homogeneous_finite(const std::vector<double>& xs, uint64_t a) {
    std::vector<double> h(a + 1, 0.0);
    h[0] = 1.0;
    for (double x : xs)
        for (uint64_t j = 1; j <= a; ++j) h[j] += x * h[j - 1];
    return h[a];
}

}  // namespace

SpectralSum spectral_sum(const SymmetryStructure& s, const EigenSequence& seq, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");

    uint64_t rank = seq.finite_rank_bound();
    uint64_t max_group = 1;
    for (const auto& b : s.blocks()) max_group = std::max<uint64_t>(max_group, b.positions.size());

    std::vector<ValErr> p(max_group + 1);  // p[j] = Σ λ_m^{jτ}
    if (rank == 0) {
        for (uint64_t j = 1; j <= max_group; ++j) {
            PowerSumResult ps = seq.power_sum(static_cast<double>(j) * tau, 1);
            if (ps.divergent) return {std::numeric_limits<double>::infinity(), 0.0, true};
            p[j] = {ps.value, ps.error_bound};
        }
    }

    std::vector<double> xs;
    if (rank > 0)
        for (uint64_t m = 1; m <= rank; ++m) xs.push_back(std::pow(seq.value(m), tau));

    ValErr total{1.0, 0.0};
    for (const auto& b : s.blocks()) {
        uint64_t a = b.positions.size();
        ValErr factor;
        if (rank > 0) {
            double x = b.kind == BlockKind::Antisymmetric ? elementary_finite(xs, a)
                       : b.kind == BlockKind::Symmetric   ? homogeneous_finite(xs, a)
                                                          : std::accumulate(xs.begin(), xs.end(), 0.0);
            factor = {x, 1e-15 * std::fabs(x)};
        } else if (b.kind == BlockKind::Free) {
            factor = p[1];
        } else if (b.kind == BlockKind::Antisymmetric) {
            // Newton: e_n = (1/n) Σ_{i<=n} (-1)^{i-1} e_{n-i} p_i
            std::vector<ValErr> e(a + 1);
            e[0] = {1.0, 0.0};
            for (uint64_t n = 1; n <= a; ++n) {
                ValErr acc;
                for (uint64_t i = 1; i <= n; ++i) {
                    ValErr term = e[n - i] * p[i];
                    acc = (i % 2 == 1) ? acc + term : acc - term;
                }
                e[n] = acc.scaled(1.0 / static_cast<double>(n));
            }
            factor = e[a];
        } else {
            // h_n = (1/n) Σ_{i<=n} h_{n-i} p_i
            std::vector<ValErr> h(a + 1);
            h[0] = {1.0, 0.0};
            for (uint64_t n = 1; n <= a; ++n) {
                ValErr acc;
                for (uint64_t i = 1; i <= n; ++i) acc = acc + h[n - i] * p[i];
                h[n] = acc.scaled(1.0 / static_cast<double>(n));
            }
            factor = h[a];
        }
        total = total * factor;
    }
    return {total.v, total.e + 1e-14 * std::fabs(total.v), false};
}

}  // namespace symtract
