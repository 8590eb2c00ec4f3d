#include "symtract/complexity.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace symtract {

namespace {

using Block = SymmetryStructure::Block;
using BlockKind = SymmetryStructure::BlockKind;

struct InfiniteSignal {
    std::string note;
};
struct HorizonSignal {
    std::string note;
};

}  // namespace

double log_initial_error_sq(const Problem& p) {
    double lg = 0.0;
    for (const auto& b : p.structure.blocks()) {
        for (size_t i = 0; i < b.positions.size(); ++i) {
            uint64_t m = b.kind == BlockKind::Antisymmetric ? i + 1 : 1;
            lg += p.seq.log_value(m);
        }
    }
    return lg;
}

double initial_error(const Problem& p) { return std::exp(0.5 * log_initial_error_sq(p)); }

Rational initial_error_sq_exact(const Problem& p) {
    Rational prod = 1;
    for (const auto& b : p.structure.blocks()) {
        for (size_t i = 0; i < b.positions.size(); ++i) {
            uint64_t m = b.kind == BlockKind::Antisymmetric ? i + 1 : 1;
            prod *= p.seq.rational_value(m);
        }
    }
    return prod;
}

double nth_minimal_error(const Problem& p, uint64_t n, ValueMode mode) {
    SpectrumStream stream(p.structure, p.seq, mode);
    for (uint64_t v = 0; v < n; ++v) {
        if (!stream.next()) return 0.0;
    }
    auto item = stream.next();
    if (!item) return 0.0;
    return std::exp(0.5 * item->log_value);
}

CountValue info_complexity(const Problem& p, const ExactReal& eps, ErrorCriterion criterion,
                           ValueMode mode, const EnumLimits& limits) {
    if (!(eps.value > 0.0)) throw std::invalid_argument("eps must be positive");
    if (criterion == ErrorCriterion::Absolute)
        return count_above_threshold(p.structure, p.seq, Threshold::from_eps(eps, mode), limits);

    if (!(eps.value < 1.0))
        throw std::invalid_argument("normalized criterion requires eps < 1");
    // threshold (ε′·ε_init)² = ε′²·λ_{d,ψ(1)}; the rescaling trick is only
    // equivalent for symmetric structures, the shifted threshold is uniform
    Threshold t;
    t.log_t = LogVal::from_log(2.0 * std::log(eps.value) + log_initial_error_sq(p));
    if (mode == ValueMode::Rational) {
        const Rational& q = eps.require_exact("eps");
        t.rat_t = q * q * initial_error_sq_exact(p);
    }
    return count_above_threshold(p.structure, p.seq, t, limits);
}

namespace {

// i_j(δ²) over a Num threshold, shared by the public wrapper and the recursion
template <class Num, class Lambda, class Greater>
uint64_t i_index_impl(Lambda&& lambda, Greater&& greater, uint64_t d, const Num& delta_sq,
                      uint64_t horizon) {
    for (uint64_t i = 1; i <= horizon; ++i) {
        Num window = lambda(i);
        for (uint64_t l = 1; l < d; ++l) window = window * lambda(i + l);
        if (!greater(window, delta_sq)) return i;
    }
    throw NoFiniteIndex("window product stayed above the threshold up to the horizon");
}

template <class M>
struct AsyRecursion {
    using Num = typename M::Num;

    const EigenSequence& seq;
    EnumLimits limits;
    StrictCompare cmp;
    std::map<std::tuple<uint64_t, uint64_t, Num>, uint64_t> memo;

    bool greater(const Num& a, const Num& b) const { return num_greater_dispatch(a, b); }
    bool num_greater_dispatch(const Num& a, const Num& b) const {
        if constexpr (std::is_same_v<Num, LogVal>) {
            return cmp.greater(a, b);
        } else {
            return a > b;
        }
    }

    Threshold as_threshold(const Num& t) const {
        Threshold th;
        if constexpr (std::is_same_v<Num, LogVal>) {
            th.log_t = t;
        } else {
            th.rat_t = t;
            th.log_t = LogVal::from_linear(to_double(t));
        }
        return th;
    }

    uint64_t univariate(const Num& t) const {
        CountValue c = seq.count_above(as_threshold(t), limits.value_horizon);
        if (c.kind == CountValue::Kind::Infinite) throw InfiniteSignal{c.note};
        if (c.kind == CountValue::Kind::HorizonExceeded) throw HorizonSignal{c.note};
        return c.count;
    }

    // #{k ∈ ∇_j (strictly increasing) : k₁ ≥ lmin, ∏ λ_{k_i} > t}
    uint64_t count(uint64_t j, const Num& t, uint64_t lmin) {
        if (j == 1) {
            uint64_t u = univariate(t);
            return u >= lmin - 1 ? u - (lmin - 1) : 0;
        }
        auto key = std::make_tuple(j, lmin, t);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        auto lam = [&](uint64_t m) { return M::lambda(seq, m); };
        auto gt = [&](const Num& a, const Num& b) { return greater(a, b); };
        uint64_t pivot = i_index_impl(lam, gt, j, t, limits.value_horizon);

        uint64_t total = 0;
        for (uint64_t l = lmin + 1; l <= pivot; ++l) {
            Num lv = M::lambda(seq, l - 1);
            if (num_is_zero_dispatch(lv)) break;
            total += count(j - 1, divide(t, lv), l);
        }
        memo.emplace(key, total);
        return total;
    }

    static bool num_is_zero_dispatch(const Num& x) {
        if constexpr (std::is_same_v<Num, LogVal>) {
            return x.is_zero();
        } else {
            return x == 0;
        }
    }
    static Num divide(const Num& a, const Num& b) {
        if constexpr (std::is_same_v<Num, LogVal>) {
            return a / b;
        } else {
            return a / b;
        }
    }
};

struct FloatModeC {
    using Num = LogVal;
    static Num lambda(const EigenSequence& s, uint64_t m) {
        return LogVal::from_log(s.log_value(m));
    }
};
struct RationalModeC {
    using Num = Rational;
    static Num lambda(const EigenSequence& s, uint64_t m) { return s.rational_value(m); }
};

template <class M>
CountValue run_recursion(const EigenSequence& seq, uint64_t d, typename M::Num t,
                         const EnumLimits& limits) {
    AsyRecursion<M> rec{seq, limits};
    try {
        uint64_t n = rec.count(d, t, 1);
        CountValue out = CountValue::finite(n);
        out.boundary_tie = rec.cmp.tie_seen;
        return out;
    } catch (const InfiniteSignal& s) {
        return CountValue::infinite(s.note);
    } catch (const HorizonSignal& s) {
        return CountValue::horizon(s.note);
    } catch (const NoFiniteIndex&) {
        return CountValue::horizon("i-index probe passed the horizon");
    }
}

}  // namespace

uint64_t i_index(const EigenSequence& seq, uint64_t d, const ExactReal& delta_sq, ValueMode mode,
                 uint64_t horizon) {
    if (!(delta_sq.value > 0.0)) throw std::invalid_argument("delta^2 must be positive");
    if (d == 0) throw std::invalid_argument("d must be positive");
    if (mode == ValueMode::Rational) {
        const Rational& q = delta_sq.require_exact("delta^2");
        auto lam = [&](uint64_t m) { return seq.rational_value(m); };
        auto gt = [](const Rational& a, const Rational& b) { return a > b; };
        return i_index_impl(lam, gt, d, q, horizon);
    }
    StrictCompare cmp;
    auto lam = [&](uint64_t m) { return LogVal::from_log(seq.log_value(m)); };
    auto gt = [&](const LogVal& a, const LogVal& b) { return cmp.greater(a, b); };
    return i_index_impl(lam, gt, d, LogVal::from_linear(delta_sq.value), horizon);
}

CountValue exact_antisymmetric_count_threshold(const EigenSequence& seq, uint64_t d,
                                               const Threshold& t, const EnumLimits& limits) {
    if (d == 0) throw std::invalid_argument("d must be positive");
    ExactReal L = seq.tail_limit();
    if (t.rational()) {
        if (L.value > 0.0 && rational_pow(L.require_exact("tail limit"), d) > *t.rat_t)
            return CountValue::infinite("spectrum does not decay below the threshold");
        return run_recursion<RationalModeC>(seq, d, *t.rat_t, limits);
    }
    if (L.value > 0.0) {
        StrictCompare cmp;
        if (cmp.greater(LogVal::from_linear(L.value).pow(double(d)), t.log_t))
            return CountValue::infinite("spectrum does not decay below the threshold");
    }
    return run_recursion<FloatModeC>(seq, d, t.log_t, limits);
}

CountValue exact_antisymmetric_count(const EigenSequence& seq, uint64_t d, const ExactReal& eps,
                                     ValueMode mode, const EnumLimits& limits) {
    if (!(eps.value > 0.0)) throw std::invalid_argument("eps must be positive");
    return exact_antisymmetric_count_threshold(seq, d, Threshold::from_eps(eps, mode), limits);
}

namespace {

uint64_t checked_pow(uint64_t base, uint64_t e) {
    uint64_t acc = 1;
    for (uint64_t i = 0; i < e; ++i) {
        if (base != 0 && acc > UINT64_MAX / base) throw std::overflow_error("count overflows 64 bits");
        acc *= base;
    }
    return acc;
}

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    if (acc > UINT64_MAX) throw std::overflow_error("count overflows 64 bits");
    return acc.convert_to<uint64_t>();
}

}  // namespace

uint64_t closed_form_finite_rank(uint64_t m, uint64_t d, FullKind kind, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("closed forms hold for 0 < eps < 1");
    if (m == 0 || d == 0) throw std::invalid_argument("m and d must be positive");
    switch (kind) {
        case FullKind::Entire:
            return checked_pow(m, d);
        case FullKind::Antisymmetric:
            return d <= m ? binomial(m, d) : 0;
        case FullKind::Symmetric:
            return binomial(m + d - 1, d);
    }
    throw std::logic_error("unreachable");
}

}  // namespace symtract
