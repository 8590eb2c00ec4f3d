#include "symtract/tractability.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace symtract {

namespace {

Group contiguous_group(uint64_t from, uint64_t to, GroupKind kind) {
    Group g;
    g.kind = kind;
    for (uint64_t i = from; i <= to; ++i) g.indices.push_back(i);
    return g;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

SymmetryStructure StructureSchedule::at(uint64_t d) const {
    if (d == 0) throw std::invalid_argument("dimension must be positive");
    switch (rule) {
        case Rule::Entire:
            return SymmetryStructure::entire(d);
        case Rule::FullySymmetric:
            return SymmetryStructure::fully_symmetric(d);
        case Rule::FullyAntisymmetric:
            return SymmetryStructure::fully_antisymmetric(d);
        case Rule::FixedFree: {
            auto b = static_cast<uint64_t>(param);
            if (d <= b + 1) return SymmetryStructure::entire(d);
            return SymmetryStructure(d, {contiguous_group(1, d - b, kind)});
        }
        case Rule::LogFree: {
            if (d == 1) return SymmetryStructure::entire(1);
            auto b = static_cast<uint64_t>(std::ceil(param * std::log(double(d))));
            b = std::min<uint64_t>(b, d - 1);
            return SymmetryStructure(d, {contiguous_group(1, d - b, kind)});
        }
        case Rule::GroupedWave: {
            if (d == 1) return SymmetryStructure::entire(1);
            uint64_t half = (d + 1) / 2;
            return SymmetryStructure(d, {contiguous_group(1, half, GroupKind::Antisymmetric),
                                         contiguous_group(half + 1, d, GroupKind::Antisymmetric)});
        }
        case Rule::ConstantAntisym: {
            auto a = std::min<uint64_t>(static_cast<uint64_t>(param), d);
            if (a < 1) a = 1;
            return SymmetryStructure(d, {contiguous_group(1, a, GroupKind::Antisymmetric)});
        }
        case Rule::LogQuotientAntisym: {
            if (d == 1) return SymmetryStructure::entire(1);
            auto a = static_cast<uint64_t>(std::ceil(double(d) / (param * std::log(double(d)))));
            a = std::clamp<uint64_t>(a, 1, d);
            return SymmetryStructure(d, {contiguous_group(1, a, GroupKind::Antisymmetric)});
        }
    }
    throw std::logic_error("unreachable");
}

StructureSchedule::Growth StructureSchedule::b_growth() const {
    switch (rule) {
        case Rule::FullySymmetric:
        case Rule::FullyAntisymmetric:
        case Rule::GroupedWave:
        case Rule::FixedFree:
            return Growth::Constant;
        case Rule::LogFree:
            return param == 0.0 ? Growth::Constant : Growth::Logarithmic;
        case Rule::Entire:
        case Rule::ConstantAntisym:
        case Rule::LogQuotientAntisym:
            return Growth::Linear;
    }
    throw std::logic_error("unreachable");
}

bool StructureSchedule::a_linear() const {
    switch (rule) {
        case Rule::FullySymmetric:
        case Rule::FullyAntisymmetric:
        case Rule::GroupedWave:
        case Rule::FixedFree:
        case Rule::LogFree:
            return true;
        case Rule::Entire:
        case Rule::ConstantAntisym:
        case Rule::LogQuotientAntisym:
            return false;
    }
    throw std::logic_error("unreachable");
}

bool StructureSchedule::symmetric_groups() const {
    switch (rule) {
        case Rule::FullySymmetric:
            return true;
        case Rule::FixedFree:
        case Rule::LogFree:
            return kind == GroupKind::Symmetric;
        default:
            return false;
    }
}

bool StructureSchedule::antisymmetric_groups() const {
    switch (rule) {
        case Rule::FullyAntisymmetric:
        case Rule::GroupedWave:
        case Rule::ConstantAntisym:
        case Rule::LogQuotientAntisym:
            return true;
        case Rule::FixedFree:
        case Rule::LogFree:
            return kind == GroupKind::Antisymmetric;
        default:
            return false;
    }
}

std::string StructureSchedule::name() const {
    switch (rule) {
        case Rule::Entire: return "entire";
        case Rule::FullySymmetric: return "fully_symmetric";
        case Rule::FullyAntisymmetric: return "fully_antisymmetric";
        case Rule::FixedFree:
            return std::string(kind == GroupKind::Symmetric ? "sym" : "asy") + "_fixed_free(" +
                   fmt(param) + ")";
        case Rule::LogFree:
            return std::string(kind == GroupKind::Symmetric ? "sym" : "asy") + "_log_free(" +
                   fmt(param) + ")";
        case Rule::GroupedWave: return "grouped_wave";
        case Rule::ConstantAntisym: return "constant_antisym(" + fmt(param) + ")";
        case Rule::LogQuotientAntisym: return "log_quotient_antisym(" + fmt(param) + ")";
    }
    return "?";
}

const char* to_string(StructureSchedule::Growth g) {
    switch (g) {
        case StructureSchedule::Growth::Constant: return "O(1)";
        case StructureSchedule::Growth::Logarithmic: return "O(log d)";
        case StructureSchedule::Growth::Linear: return "linear";
    }
    return "?";
}

uint64_t FRule::operator()(uint64_t d) const {
    double v = c * std::pow(static_cast<double>(d), q);
    if (v < 1.0) return 1;
    return static_cast<uint64_t>(std::ceil(v));
}

namespace {

SumConditionResult sum_condition(const StructureSchedule& sched, const EigenSequence& seq,
                                 double tau, double r, FRule f, uint64_t d_max, bool normalized) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
    SumConditionResult out;
    for (uint64_t d = 1; d <= d_max; ++d) {
        SymmetryStructure st = sched.at(d);
        SumConditionRow row;
        row.d = d;
        row.f_d = f(d);
        SpectralSum total = spectral_sum(st, seq, tau);
        if (total.divergent) {
            row.divergent = true;
            row.value = std::numeric_limits<double>::infinity();
            out.any_divergent = true;
            out.rows.push_back(row);
            continue;
        }
        double omitted = 0.0;
        if (row.f_d > 1) {
            auto top = top_eigenvalues(st, seq, row.f_d - 1, ValueMode::Float);
            for (const auto& item : top) omitted += std::exp(tau * item.log_value);
        }
        double rest = std::max(0.0, total.value - omitted);
        double err = total.error_bound;
        if (normalized) {
            // divide through by λ_{d,1}^τ in the log domain
            double lg_max = log_initial_error_sq(Problem{st, seq});
            double scale = tau * lg_max;
            rest = std::exp(std::log(std::max(rest, 0.0)) - scale);
            err = err > 0.0 ? std::exp(std::log(err) - scale) : 0.0;
            if (rest == 0.0) err = std::max(err, 0.0);
        }
        row.value = std::pow(rest, 1.0 / tau) / std::pow(static_cast<double>(d), r);
        // first-order: d/dx x^{1/τ} = (1/τ) x^{1/τ-1}
        row.error_bound = rest > 0.0
                              ? (1.0 / tau) * std::pow(rest, 1.0 / tau - 1.0) * err /
                                    std::pow(static_cast<double>(d), r)
                              : std::pow(err, 1.0 / tau);
        out.rows.push_back(row);
        out.sup = std::max(out.sup, row.value);
    }
    return out;
}

}  // namespace

SumConditionResult check_sum_condition_abs(const StructureSchedule& sched, const EigenSequence& seq,
                                           double tau, double r, FRule f, uint64_t d_max) {
    return sum_condition(sched, seq, tau, r, f, d_max, false);
}

SumConditionResult check_sum_condition_norm(const StructureSchedule& sched, const EigenSequence& seq,
                                            double tau, double r, FRule f, uint64_t d_max) {
    return sum_condition(sched, seq, tau, r, f, d_max, true);
}

namespace {

double log_factorial(uint64_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// Σ_g ln(a_{d,g}!)/d over the antisymmetric groups of the structure
double antisym_lhs(const SymmetryStructure& st) {
    double s = 0.0;
    for (const auto& b : st.blocks())
        if (b.kind == SymmetryStructure::BlockKind::Antisymmetric)
            s += log_factorial(b.positions.size());
    return s / static_cast<double>(st.d());
}

}  // namespace

SufficiencyResult sufficient_antisymmetric(const StructureSchedule& sched, const EigenSequence& seq,
                                           double tau, uint64_t d_min, uint64_t d_max) {
    if (d_min == 0 || d_min > d_max) throw std::invalid_argument("bad d range");
    SufficiencyResult out;
    if (seq.value(1) < 1.0) {
        // λ₁ < 1: strong polynomial tractability regardless of a_d
        out.kind = SufficiencyResult::Kind::ShortcutSmallLambda1;
        return out;
    }
    PowerSumResult norm = seq.power_sum(tau, 1);
    if (norm.divergent) {
        out.kind = SufficiencyResult::Kind::Fails;
        out.rhs = std::numeric_limits<double>::infinity();
        return out;
    }
    out.rhs = std::log(norm.value);
    uint64_t d0 = 0;
    for (uint64_t d = d_min; d <= d_max; ++d) {
        double lhs = antisym_lhs(sched.at(d));
        out.lhs_per_d.emplace_back(d, lhs);
        if (lhs >= out.rhs) {
            if (d0 == 0) d0 = d;
        } else {
            d0 = 0;  // must hold throughout the remaining range
        }
    }
    if (d0 != 0) {
        out.kind = SufficiencyResult::Kind::HoldsFrom;
        out.d0 = d0;
    } else {
        out.kind = SufficiencyResult::Kind::Fails;
    }
    return out;
}

NecessaryBoundResult necessary_antisymmetric_bound(const StructureSchedule& sched,
                                                   const EigenSequence& seq, double tau,
                                                   double delta, uint64_t d_min, uint64_t d_max) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    NecessaryBoundResult out;
    if (seq.value(1) < 1.0) {
        out.applicable = false;  // the verdict comes from sufficiency there
        return out;
    }
    PowerSumResult norm = seq.power_sum(tau, 1);
    double log_norm = norm.divergent ? std::numeric_limits<double>::infinity()
                                     : std::log(norm.value);
    for (uint64_t d = d_min; d <= d_max; ++d) {
        SymmetryStructure st = sched.at(d);
        NecessaryBoundRow row;
        row.d = d;
        row.lhs = log_norm - delta;
        double s = 0.0;
        for (const auto& b : st.blocks())
            if (b.kind == SymmetryStructure::BlockKind::Antisymmetric)
                for (size_t i = 0; i < b.positions.size(); ++i)
                    s += log_norm - tau * seq.log_value(i + 1);
        row.rhs = s / static_cast<double>(d);
        row.holds = row.lhs <= row.rhs;
        out.rows.push_back(row);
    }
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::StrongPolyTract: return "StrongPolyTract";
        case Verdict::PolyTractNotStrong: return "PolyTract-not-Strong";
        case Verdict::PolyIntractable: return "PolyIntractable";
        case Verdict::Curse: return "Curse";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

namespace {

struct ClassifyContext {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::optional<double> tau_used;
    double norm_tau_tau = 0.0;  // ‖λ‖_τ^τ at tau_used
};

TractabilityReport make_report(const ClassifyContext& ctx, const StructureSchedule& sched,
                               ErrorCriterion crit, Verdict v, std::string clause) {
    TractabilityReport r;
    r.verdict = v;
    r.criterion = crit;
    r.clause = std::move(clause);
    r.witnesses["lambda1"] = fmt(ctx.lambda1);
    r.witnesses["lambda2"] = fmt(ctx.lambda2);
    r.witnesses["b_growth"] = to_string(sched.b_growth());
    r.witnesses["a_linear"] = sched.a_linear() ? "true" : "false";
    r.witnesses["schedule"] = sched.name();
    if (ctx.tau_used) {
        r.witnesses["tau"] = fmt(*ctx.tau_used);
        r.witnesses["norm_tau_tau"] = fmt(ctx.norm_tau_tau);
    }
    return r;
}

}  // namespace

TractabilityReport classify(const StructureSchedule& sched, const EigenSequence& seq,
                            ErrorCriterion crit, const std::vector<double>& tau_grid) {
    ClassifyContext ctx;
    ctx.lambda1 = seq.value(1);
    ctx.lambda2 = seq.value(2);

    // λ₂ = 0: the problem is a continuous linear functional, solved exactly
    // with one information operation
    if (ctx.lambda2 == 0.0)
        return make_report(ctx, sched, crit, Verdict::StrongPolyTract,
                           "trivial functional: lambda2 = 0, one information operation suffices");

    // summability is necessary for polynomial tractability under either
    // criterion, for any amount of (anti-)symmetry
    auto summ = seq.summability();
    if (!summ.tau_threshold)
        return make_report(ctx, sched, crit, Verdict::PolyIntractable,
                           "lambda lies in no ell_tau space; the necessary summability "
                           "condition fails");
    ctx.tau_used = seq.find_tau_membership(tau_grid);
    if (!ctx.tau_used && summ.tau_threshold) ctx.tau_used = 2.0 * std::max(*summ.tau_threshold, 0.5);
    if (ctx.tau_used) {
        PowerSumResult ps = seq.power_sum(*ctx.tau_used, 1);
        ctx.norm_tau_tau = ps.value;
    }

    const auto b = sched.b_growth();
    const bool b_const = b == StructureSchedule::Growth::Constant;
    const bool b_log = b != StructureSchedule::Growth::Linear;

    if (sched.entire_rule()) {
        if (crit == ErrorCriterion::Normalized)
            return make_report(ctx, sched, crit, Verdict::PolyIntractable,
                               "entire tensor product problems are never polynomially tractable "
                               "under the normalized criterion");
        if (ctx.lambda2 >= 1.0)
            return make_report(ctx, sched, crit, Verdict::Curse,
                               "entire with lambda2 >= 1: all 2^d indices over {1,2}^d exceed any "
                               "eps^2 < 1");
        if (ctx.lambda1 < 1.0)
            return make_report(ctx, sched, crit, Verdict::StrongPolyTract,
                               "entire absolute: lambda in ell_tau and lambda1 < 1");
        return make_report(ctx, sched, crit, Verdict::Indeterminate,
                           "entire absolute with lambda1 >= 1 > lambda2 is not characterized here");
    }

    if (sched.symmetric_groups()) {
        if (crit == ErrorCriterion::Absolute) {
            if (ctx.lambda1 > 1.0)
                return make_report(ctx, sched, crit, Verdict::Indeterminate,
                                   "symmetric absolute is characterized only for lambda1 <= 1");
            if (ctx.lambda1 < 1.0)
                return make_report(ctx, sched, crit, Verdict::StrongPolyTract,
                                   "symmetric absolute: lambda1 < 1 and lambda in ell_tau");
            if (ctx.lambda2 < 1.0 && b_const)
                return make_report(ctx, sched, crit, Verdict::StrongPolyTract,
                                   "symmetric absolute: lambda1 = 1 > lambda2 and b_d in O(1)");
            if (b_log)
                return make_report(ctx, sched, crit, Verdict::PolyTractNotStrong,
                                   "symmetric absolute: lambda1 = 1 and b_d in O(log d); strong "
                                   "polynomial tractability needs lambda2 < 1 and b_d in O(1)");
            return make_report(ctx, sched, crit, Verdict::PolyIntractable,
                               "symmetric absolute: lambda1 = 1 and b_d grows beyond O(log d)");
        }
        // normalized: the rescaled sequence μ = λ/λ₁ reduces to the absolute case
        if (ctx.lambda1 > ctx.lambda2 && b_const)
            return make_report(ctx, sched, crit, Verdict::StrongPolyTract,
                               "symmetric normalized: lambda in ell_tau, lambda1 > lambda2, b_d in "
                               "O(1)");
        if (b_log)
            return make_report(ctx, sched, crit, Verdict::PolyTractNotStrong,
                               "symmetric normalized: lambda in ell_tau and b_d in O(log d); "
                               "strong polynomial tractability needs lambda1 > lambda2 and b_d in "
                               "O(1)");
        return make_report(ctx, sched, crit, Verdict::PolyIntractable,
                           "symmetric normalized: b_d grows beyond O(log d)");
    }

    if (sched.antisymmetric_groups()) {
        if (crit == ErrorCriterion::Absolute) {
            if (ctx.lambda1 < 1.0)
                return make_report(ctx, sched, crit, Verdict::StrongPolyTract,
                                   "antisymmetric absolute: lambda in ell_tau and lambda1 < 1");
            if (sched.a_linear())
                return make_report(ctx, sched, crit, Verdict::StrongPolyTract,
                                   "antisymmetric absolute: lambda in ell_tau and a_d grows "
                                   "linearly");
            // λ₁ >= 1 with sublinear antisymmetry. a_d = d/(alpha·ln d) gives
            // ln(a_d!)/d → 1/alpha, so 1/alpha > ln ||λ||_τ^τ certifies the
            // sufficient condition from some d0 on.
            if (sched.rule == StructureSchedule::Rule::LogQuotientAntisym) {
                for (double tau : tau_grid) {
                    if (!seq.in_ell_tau(tau)) continue;
                    PowerSumResult ps = seq.power_sum(tau, 1);
                    if (ps.divergent) continue;
                    if (1.0 / sched.param > std::log(ps.value)) {
                        auto rep = make_report(ctx, sched, crit, Verdict::StrongPolyTract,
                                               "antisymmetric absolute: ln(a_d!)/d tends to "
                                               "1/alpha > ln ||lambda||_tau^tau, so the "
                                               "sufficient condition holds from some d0 on");
                        rep.witnesses["suf_tau"] = fmt(tau);
                        rep.witnesses["asymptotic_lhs"] = fmt(1.0 / sched.param);
                        rep.witnesses["suf_rhs"] = fmt(std::log(ps.value));
                        return rep;
                    }
                }
            }
            if (sched.rule == StructureSchedule::Rule::ConstantAntisym) {
                // bounded a_d with λ₁ >= 1: the necessary bound's right side
                // decays like 1/d while the left side stays positive
                auto rep = make_report(ctx, sched, crit, Verdict::PolyIntractable,
                                       "antisymmetric absolute: lambda1 >= 1 requires a_d to grow, "
                                       "but a_d is bounded");
                if (ctx.tau_used) {
                    auto nec = necessary_antisymmetric_bound(sched, seq, *ctx.tau_used, 1e-3, 4, 64);
                    if (!nec.rows.empty()) {
                        rep.witnesses["nec_lhs"] = fmt(nec.rows.back().lhs);
                        rep.witnesses["nec_rhs_last"] = fmt(nec.rows.back().rhs);
                        rep.witnesses["nec_holds_last"] = nec.rows.back().holds ? "true" : "false";
                    }
                }
                return rep;
            }
            auto rep = make_report(ctx, sched, crit, Verdict::Indeterminate,
                                   "antisymmetric absolute with lambda1 >= 1 and sublinear a_d: "
                                   "the sufficient and necessary conditions leave a gap");
            if (ctx.tau_used) {
                auto suf = sufficient_antisymmetric(sched, seq, *ctx.tau_used, 4, 64);
                rep.witnesses["suf_kind"] = suf.kind == SufficiencyResult::Kind::HoldsFrom
                                                ? "holds_in_probed_range"
                                                : "fails_in_probed_range";
                rep.witnesses["suf_rhs"] = fmt(suf.rhs);
                auto nec = necessary_antisymmetric_bound(sched, seq, *ctx.tau_used, 1e-3, 4, 64);
                if (!nec.rows.empty())
                    rep.witnesses["nec_holds_last"] = nec.rows.back().holds ? "true" : "false";
            }
            return rep;
        }
        // normalized antisymmetric: only necessary conditions are available
        if (!b_log)
            return make_report(ctx, sched, crit, Verdict::PolyIntractable,
                               "antisymmetric normalized: b_d in O(log d) is necessary and fails");
        auto rep = make_report(ctx, sched, crit, Verdict::Indeterminate,
                               "antisymmetric normalized: the necessary conditions hold but no "
                               "sufficient condition applies");
        if (seq.family() == Family::PowerDecay &&
            sched.rule == StructureSchedule::Rule::FullyAntisymmetric) {
            rep.witnesses["strong_poly_refuted"] = "true";
            rep.witnesses["lower_bound"] = "d((eps')^{-1/alpha} - 1)";
        }
        return rep;
    }

    return make_report(ctx, sched, crit, Verdict::Indeterminate,
                       "mixed group kinds are not covered by the classification theorems");
}

namespace {

// Σ over non-decreasing tuples of length len with entries in [lo, m] of ∏ μ
template <class T>
T ordered_tuple_sum(const std::vector<T>& mu, uint64_t len, uint64_t lo) {
    if (len == 0) return T(1);
    T total(0);
    for (uint64_t v = lo; v <= mu.size(); ++v) {
        T sub = ordered_tuple_sum(mu, len - 1, v);
        total += mu[v - 1] * sub;
    }
    return total;
}

template <class T>
std::pair<T, T> appendix_sides(const std::vector<T>& mu, uint64_t d, uint64_t V) {
    T lhs = ordered_tuple_sum(mu, d, 1);
    // μ₁^d d^V (1 + V + Σ_{L=1}^d μ₁^{-L} Σ_{V+2 <= j_1 <= ... <= j_L} μ_{L,j})
    T inner(0);
    T mu1 = mu[0];
    T mu1_pow(1);
    for (uint64_t L = 1; L <= d; ++L) {
        mu1_pow *= mu1;
        T tail = ordered_tuple_sum(mu, L, V + 2);
        inner += tail / mu1_pow;
    }
    T dV(1);
    for (uint64_t i = 0; i < V; ++i) dV *= T(d);
    T mu1_d(1);
    for (uint64_t i = 0; i < d; ++i) mu1_d *= mu1;
    T rhs = mu1_d * dV * (T(1) + T(V) + inner);
    return {lhs, rhs};
}

}  // namespace

AppendixCheck verify_appendix_inequality(const std::vector<ExactReal>& mu, uint64_t d, uint64_t V) {
    if (mu.empty() || !(mu[0].value > 0.0))
        throw std::invalid_argument("mu must be non-empty with mu1 > 0");
    for (size_t i = 1; i < mu.size(); ++i)
        if (mu[i].value > mu[i - 1].value || mu[i].value < 0.0)
            throw std::invalid_argument("mu must be non-increasing and non-negative");
    if (d == 0) throw std::invalid_argument("d must be positive");

    AppendixCheck out;
    bool exact = std::all_of(mu.begin(), mu.end(),
                             [](const ExactReal& v) { return v.exact.has_value(); });
    if (exact) {
        std::vector<Rational> q;
        for (const auto& v : mu) q.push_back(*v.exact);
        auto [lhs, rhs] = appendix_sides(q, d, V);
        out.lhs = to_double(lhs);
        out.rhs = to_double(rhs);
        out.holds = lhs <= rhs;
        out.equality = lhs == rhs;
        out.exact = true;
    } else {
        std::vector<double> x;
        for (const auto& v : mu) x.push_back(v.value);
        auto [lhs, rhs] = appendix_sides(x, d, V);
        out.lhs = lhs;
        out.rhs = rhs;
        out.holds = lhs <= rhs * (1.0 + 1e-12);
        out.equality = std::fabs(lhs - rhs) <= 1e-12 * std::max(lhs, rhs);
        out.exact = false;
    }
    return out;
}

FitResult fit_exponents(std::span<const FitRow> grid) {
    if (grid.size() < 3) throw DegenerateGrid("need at least three grid rows");
    Eigen::MatrixXd A(static_cast<Eigen::Index>(grid.size()), 3);
    Eigen::VectorXd b(static_cast<Eigen::Index>(grid.size()));
    for (size_t i = 0; i < grid.size(); ++i) {
        const auto& row = grid[i];
        if (row.n < 1) throw std::invalid_argument("fit grid requires n >= 1 entries only");
        if (!(row.eps > 0.0) || row.d == 0) throw std::invalid_argument("bad fit grid row");
        auto idx = static_cast<Eigen::Index>(i);
        A(idx, 0) = 1.0;
        A(idx, 1) = std::log(1.0 / row.eps);
        A(idx, 2) = std::log(static_cast<double>(row.d));
        b(idx) = std::log(static_cast<double>(row.n));
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (qr.rank() < 3) throw DegenerateGrid("design matrix is rank-deficient");
    Eigen::VectorXd x = qr.solve(b);
    FitResult r;
    r.constant = std::exp(x(0));
    r.p_hat = x(1);
    r.q_hat = x(2);
    r.residual = std::sqrt((A * x - b).squaredNorm() / static_cast<double>(grid.size()));
    return r;
}

}  // namespace symtract
