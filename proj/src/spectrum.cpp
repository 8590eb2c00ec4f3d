#include "symtract/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symtract {

namespace {

bool is_nonneg_integer(double x) { return x >= 0.0 && std::floor(x) == x && x < 1e18; }

// Σ_{m=s}^∞ m^(-σ) for σ > 1: partial sum up to M (summed small-to-large),
// then the integral bracket for the tail. The half-width of the bracket is
// the certified truncation error.
PowerSumResult zeta_tail(double sigma, uint64_t s) {
    if (sigma <= 1.0) return PowerSumResult::diverged();
    uint64_t target = static_cast<uint64_t>(std::pow(1e12, 1.0 / sigma)) + 1;
    uint64_t M = std::clamp<uint64_t>(target, 1000, 2'000'000);
    M = std::max(M, s);
    double partial = 0.0;
    for (uint64_t m = M; m >= s; --m) {
        partial += std::pow(static_cast<double>(m), -sigma);
        if (m == 0) break;
    }
    double lower = std::pow(static_cast<double>(M) + 1.0, 1.0 - sigma) / (sigma - 1.0);
    double upper = std::pow(static_cast<double>(M), 1.0 - sigma) / (sigma - 1.0);
    PowerSumResult r;
    r.value = partial + 0.5 * (lower + upper);
    r.error_bound = 0.5 * (upper - lower) + 1e-15 * r.value;
    return r;
}

// Largest m >= 0 with m^A * p < q (A >= 1); prefix property in m.
uint64_t largest_m_power(const BigInt& p, const BigInt& q, uint64_t A, bool& overflow) {
    overflow = false;
    auto ok = [&](uint64_t m) {
        BigInt mp = 1;
        BigInt mm = m;
        uint64_t e = A;
        while (e > 0) {
            if (e & 1) mp *= mm;
            mm *= mm;
            e >>= 1;
        }
        return mp * p < q;
    };
    if (!ok(1)) return 0;
    uint64_t hi = 2;
    const uint64_t cap = uint64_t(1) << 62;
    while (ok(hi)) {
        if (hi >= cap) {
            overflow = true;
            return hi;
        }
        hi *= 2;
    }
    uint64_t lo = hi / 2;  // ok(lo) true, ok(hi) false
    while (hi - lo > 1) {
        uint64_t mid = lo + (hi - lo) / 2;
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

void EigenSequence::validate_list() const {
    if (values_.empty()) throw std::invalid_argument("eigenvalue list must be non-empty");
    if (values_.front().value <= 0.0)
        throw std::invalid_argument("lambda_1 must be positive (zero operator rejected)");
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i].value < 0.0) throw std::invalid_argument("eigenvalues must be non-negative");
        if (i > 0 && values_[i].value > values_[i - 1].value)
            throw std::invalid_argument("eigenvalues must be non-increasing");
    }
}

EigenSequence EigenSequence::finite_rank(std::vector<ExactReal> values) {
    EigenSequence s;
    s.family_ = Family::FiniteRank;
    s.values_ = std::move(values);
    s.validate_list();
    s.rational_ok_ = std::all_of(s.values_.begin(), s.values_.end(),
                                 [](const ExactReal& v) { return v.exact.has_value(); });
    return s;
}

EigenSequence EigenSequence::power_decay(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("power decay requires alpha > 0");
    EigenSequence s;
    s.family_ = Family::PowerDecay;
    s.alpha_ = alpha;
    s.rational_ok_ = is_nonneg_integer(2.0 * alpha) && 2.0 * alpha >= 1.0;
    return s;
}

EigenSequence EigenSequence::shifted_power(double beta) {
    if (!(beta >= 0.0)) throw std::invalid_argument("shifted power requires beta >= 0");
    EigenSequence s;
    s.family_ = Family::ShiftedPower;
    s.beta_ = beta;
    s.rational_ok_ = is_nonneg_integer(beta);
    return s;
}

EigenSequence EigenSequence::geometric(ExactReal ratio, ExactReal scale) {
    if (!(ratio.value > 0.0 && ratio.value < 1.0))
        throw std::invalid_argument("geometric ratio must lie in (0,1)");
    if (!(scale.value > 0.0)) throw std::invalid_argument("geometric scale must be positive");
    EigenSequence s;
    s.family_ = Family::Geometric;
    s.ratio_ = std::move(ratio);
    s.scale_ = std::move(scale);
    s.rational_ok_ = s.ratio_.exact.has_value() && s.scale_.exact.has_value();
    return s;
}

EigenSequence EigenSequence::log_decay() {
    EigenSequence s;
    s.family_ = Family::LogDecay;
    s.rational_ok_ = false;
    return s;
}

EigenSequence EigenSequence::explicit_list(std::vector<ExactReal> values, ExplicitTail tail) {
    EigenSequence s;
    s.family_ = Family::Explicit;
    s.values_ = std::move(values);
    s.tail_ = std::move(tail);
    s.validate_list();
    double last = s.values_.back().value;
    switch (s.tail_.rule) {
        case TailRule::Zero:
            break;
        case TailRule::Geometric:
            if (!(s.tail_.param.value > 0.0 && s.tail_.param.value < 1.0))
                throw std::invalid_argument("geometric tail ratio must lie in (0,1)");
            break;
        case TailRule::Constant:
            if (s.tail_.param.value < 0.0 || s.tail_.param.value > last)
                throw std::invalid_argument("constant tail must keep the sequence non-increasing");
            if (s.tail_.param.value == 0.0) s.tail_.rule = TailRule::Zero;
            break;
    }
    bool list_ok = std::all_of(s.values_.begin(), s.values_.end(),
                               [](const ExactReal& v) { return v.exact.has_value(); });
    bool tail_ok = s.tail_.rule == TailRule::Zero || s.tail_.param.exact.has_value();
    s.rational_ok_ = list_ok && tail_ok;
    return s;
}

std::string EigenSequence::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::FiniteRank:
            os << "FiniteRank(n=" << values_.size() << ")";
            break;
        case Family::PowerDecay:
            os << "PowerDecay(alpha=" << alpha_ << ")";
            break;
        case Family::ShiftedPower:
            os << "ShiftedPower(beta=" << beta_ << ")";
            break;
        case Family::Geometric:
            os << "Geometric(r=" << ratio_.value << ",c=" << scale_.value << ")";
            break;
        case Family::LogDecay:
            os << "LogDecay";
            break;
        case Family::Explicit:
            os << "Explicit(n=" << values_.size() << ")";
            break;
    }
    return os.str();
}

double EigenSequence::value(uint64_t m) const {
    if (m == 0) throw std::invalid_argument("eigenvalue index starts at 1");
    switch (family_) {
        case Family::FiniteRank:
            return m <= values_.size() ? values_[m - 1].value : 0.0;
        case Family::PowerDecay:
            return std::pow(static_cast<double>(m), -2.0 * alpha_);
        case Family::ShiftedPower:
            return m == 1 ? 1.0 : std::pow(static_cast<double>(m - 1), -beta_);
        case Family::Geometric:
            return scale_.value * std::pow(ratio_.value, static_cast<double>(m - 1));
        case Family::LogDecay:
            return 1.0 / std::log(static_cast<double>(m) + 1.0);
        case Family::Explicit: {
            if (m <= values_.size()) return values_[m - 1].value;
            uint64_t j = m - values_.size();
            switch (tail_.rule) {
                case TailRule::Zero: return 0.0;
                case TailRule::Geometric:
                    return values_.back().value * std::pow(tail_.param.value, static_cast<double>(j));
                case TailRule::Constant: return tail_.param.value;
            }
        }
    }
    return 0.0;
}

double EigenSequence::log_value(uint64_t m) const {
    if (m == 0) throw std::invalid_argument("eigenvalue index starts at 1");
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    switch (family_) {
        case Family::FiniteRank: {
            double v = m <= values_.size() ? values_[m - 1].value : 0.0;
            return v > 0.0 ? std::log(v) : kNegInf;
        }
        case Family::PowerDecay:
            return -2.0 * alpha_ * std::log(static_cast<double>(m));
        case Family::ShiftedPower:
            return m == 1 ? 0.0 : -beta_ * std::log(static_cast<double>(m - 1));
        case Family::Geometric:
            return std::log(scale_.value) + static_cast<double>(m - 1) * std::log(ratio_.value);
        case Family::LogDecay:
            return -std::log(std::log(static_cast<double>(m) + 1.0));
        case Family::Explicit: {
            if (m <= values_.size()) {
                double v = values_[m - 1].value;
                return v > 0.0 ? std::log(v) : kNegInf;
            }
            uint64_t j = m - values_.size();
            switch (tail_.rule) {
                case TailRule::Zero: return kNegInf;
                case TailRule::Geometric:
                    return std::log(values_.back().value) +
                           static_cast<double>(j) * std::log(tail_.param.value);
                case TailRule::Constant:
                    return tail_.param.value > 0.0 ? std::log(tail_.param.value) : kNegInf;
            }
        }
    }
    return kNegInf;
}

Rational EigenSequence::rational_value(uint64_t m) const {
    if (!rational_ok_) throw std::logic_error("sequence has no exact rational representation");
    if (m == 0) throw std::invalid_argument("eigenvalue index starts at 1");
    switch (family_) {
        case Family::FiniteRank:
            return m <= values_.size() ? *values_[m - 1].exact : Rational(0);
        case Family::PowerDecay: {
            auto A = static_cast<uint64_t>(2.0 * alpha_);
            return Rational(1) / rational_pow(Rational(m), A);
        }
        case Family::ShiftedPower: {
            if (m == 1) return 1;
            auto B = static_cast<uint64_t>(beta_);
            return Rational(1) / rational_pow(Rational(m - 1), B);
        }
        case Family::Geometric:
            return *scale_.exact * rational_pow(*ratio_.exact, m - 1);
        case Family::LogDecay:
            break;
        case Family::Explicit: {
            if (m <= values_.size()) return *values_[m - 1].exact;
            uint64_t j = m - values_.size();
            switch (tail_.rule) {
                case TailRule::Zero: return 0;
                case TailRule::Geometric:
                    return *values_.back().exact * rational_pow(*tail_.param.exact, j);
                case TailRule::Constant: return *tail_.param.exact;
            }
        }
    }
    throw std::logic_error("unreachable");
}

uint64_t EigenSequence::finite_rank_bound() const {
    if (family_ == Family::FiniteRank || (family_ == Family::Explicit && tail_.rule == TailRule::Zero)) {
        uint64_t n = values_.size();
        while (n > 0 && values_[n - 1].value == 0.0) --n;
        return n;
    }
    return 0;
}

ExactReal EigenSequence::tail_limit() const {
    if (family_ == Family::ShiftedPower && beta_ == 0.0) return ExactReal(1.0, Rational(1));
    if (family_ == Family::Explicit && tail_.rule == TailRule::Constant) return tail_.param;
    ExactReal zero(0.0);
    zero.exact = Rational(0);
    return zero;
}

bool EigenSequence::tends_to_zero() const {
    switch (family_) {
        case Family::FiniteRank:
        case Family::PowerDecay:
        case Family::Geometric:
        case Family::LogDecay:
            return true;
        case Family::ShiftedPower:
            return beta_ > 0.0;
        case Family::Explicit:
            return tail_.rule != TailRule::Constant;
    }
    return false;
}

EigenSequence::Summability EigenSequence::summability() const {
    switch (family_) {
        case Family::FiniteRank:
        case Family::Geometric:
            return {0.0, false};
        case Family::PowerDecay:
            return {1.0 / (2.0 * alpha_), false};
        case Family::ShiftedPower:
            if (beta_ == 0.0) return {std::nullopt, false};
            return {1.0 / beta_, false};
        case Family::LogDecay:
            return {std::nullopt, false};
        case Family::Explicit:
            if (tail_.rule == TailRule::Constant) return {std::nullopt, false};
            return {0.0, false};
    }
    return {std::nullopt, false};
}

bool EigenSequence::in_ell_tau(double tau) const {
    auto s = summability();
    if (!s.tau_threshold) return false;
    return tau > *s.tau_threshold || (s.threshold_included && tau == *s.tau_threshold);
}

PowerSumResult EigenSequence::power_sum(double tau, uint64_t start) const {
    if (!(tau > 0.0)) throw std::invalid_argument("power sum requires tau > 0");
    if (start == 0) throw std::invalid_argument("power sum start index begins at 1");
    switch (family_) {
        case Family::FiniteRank: {
            PowerSumResult r;
            for (uint64_t m = values_.size(); m >= start; --m) {
                r.value += std::pow(values_[m - 1].value, tau);
                if (m == 1) break;
            }
            return r;
        }
        case Family::PowerDecay:
            return zeta_tail(2.0 * alpha_ * tau, start);
        case Family::ShiftedPower: {
            if (beta_ == 0.0) return PowerSumResult::diverged();
            double sigma = beta_ * tau;
            if (sigma <= 1.0) return PowerSumResult::diverged();
            PowerSumResult r = zeta_tail(sigma, start > 1 ? start - 1 : 1);
            if (start == 1) r.value += 1.0;
            return r;
        }
        case Family::Geometric: {
            // Σ_{m>=s} (c·r^{m-1})^τ = c^τ r^{(s-1)τ} / (1 - r^τ), exact.
            double rt = std::pow(ratio_.value, tau);
            PowerSumResult r;
            r.value = std::pow(scale_.value, tau) *
                      std::pow(ratio_.value, static_cast<double>(start - 1) * tau) / (1.0 - rt);
            return r;
        }
        case Family::LogDecay:
            // (ln(m+1))^{-τ} decays slower than any positive power of 1/m.
            return PowerSumResult::diverged();
        case Family::Explicit: {
            PowerSumResult r;
            for (uint64_t m = values_.size(); m >= start; --m) {
                r.value += std::pow(values_[m - 1].value, tau);
                if (m == 1) break;
            }
            if (tail_.rule == TailRule::Zero) return r;
            if (tail_.rule == TailRule::Constant) return PowerSumResult::diverged();
            // tail terms λ_{n+j} = v·ρ^j, j >= j0
            double v = values_.back().value;
            double rt = std::pow(tail_.param.value, tau);
            uint64_t j0 = start > values_.size() ? start - values_.size() : 1;
            r.value += std::pow(v, tau) *
                       std::pow(tail_.param.value, static_cast<double>(j0) * tau) / (1.0 - rt);
            return r;
        }
    }
    return PowerSumResult::diverged();
}

std::optional<double> EigenSequence::find_tau_membership(std::span<const double> grid) const {
    if (grid.empty()) throw std::invalid_argument("tau grid must be non-empty");
    for (size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) throw std::invalid_argument("tau grid must be increasing");
    for (double tau : grid)
        if (in_ell_tau(tau)) return tau;
    return std::nullopt;
}

CountValue EigenSequence::count_above(const Threshold& t, uint64_t horizon) const {
    // #{m : λ_m > t} is a prefix count by monotonicity.
    if (t.rational() && !rational_ok_)
        throw std::logic_error("rational threshold on a non-rational family");

    if (t.rational()) {
        const Rational& q = *t.rat_t;
        if (q < 0) throw std::invalid_argument("threshold must be positive");
        switch (family_) {
            case Family::FiniteRank: {
                uint64_t n = 0;
                for (const auto& v : values_)
                    if (*v.exact > q) ++n;
                return CountValue::finite(n);
            }
            case Family::PowerDecay: {
                // 1/m^A > p/q'  <=>  m^A p < q'
                auto A = static_cast<uint64_t>(2.0 * alpha_);
                bool overflow = false;
                uint64_t n = largest_m_power(numerator(q), denominator(q), A, overflow);
                if (overflow) return CountValue::horizon("count exceeds 2^62");
                return CountValue::finite(n);
            }
            case Family::ShiftedPower: {
                auto B = static_cast<uint64_t>(beta_);
                uint64_t head = q < 1 ? 1 : 0;
                if (B == 0)
                    return head ? CountValue::infinite("constant sequence stays above threshold")
                                : CountValue::finite(0);
                bool overflow = false;
                uint64_t n = largest_m_power(numerator(q), denominator(q), B, overflow);
                if (overflow) return CountValue::horizon("count exceeds 2^62");
                return CountValue::finite(head + n);
            }
            case Family::Geometric: {
                Rational v = *scale_.exact;
                uint64_t n = 0;
                while (v > q) {
                    ++n;
                    if (n > horizon) return CountValue::horizon("geometric count passed horizon");
                    v *= *ratio_.exact;
                }
                return CountValue::finite(n);
            }
            case Family::Explicit: {
                uint64_t n = 0;
                for (const auto& v : values_) {
                    if (*v.exact > q) ++n;
                }
                if (n < values_.size() || tail_.rule == TailRule::Zero) return CountValue::finite(n);
                if (tail_.rule == TailRule::Constant) {
                    if (*tail_.param.exact > q)
                        return CountValue::infinite("constant tail stays above threshold");
                    return CountValue::finite(n);
                }
                Rational v = *values_.back().exact * *tail_.param.exact;
                while (v > q) {
                    ++n;
                    if (n > horizon) return CountValue::horizon("geometric tail count passed horizon");
                    v *= *tail_.param.exact;
                }
                return CountValue::finite(n);
            }
            case Family::LogDecay:
                break;
        }
        throw std::logic_error("unreachable");
    }

    StrictCompare cmp;
    auto above = [&](uint64_t m) { return cmp.greater(LogVal::from_log(log_value(m)), t.log_t); };
    auto walk = [&](uint64_t cand) {
        while (above(cand + 1)) ++cand;
        while (cand > 0 && !above(cand)) --cand;
        CountValue r = CountValue::finite(cand);
        r.boundary_tie = cmp.tie_seen;
        return r;
    };
    const double log_t = t.log_t.lg;

    switch (family_) {
        case Family::FiniteRank:
        case Family::Explicit: {
            uint64_t n = 0;
            for (uint64_t m = 1; m <= values_.size(); ++m)
                if (above(m)) ++n;
            if (n == values_.size() && family_ == Family::Explicit && tail_.rule != TailRule::Zero) {
                if (tail_.rule == TailRule::Constant) {
                    if (above(values_.size() + 1))
                        return CountValue::infinite("constant tail stays above threshold");
                } else {
                    while (above(n + 1)) {
                        ++n;
                        if (n > horizon) return CountValue::horizon("geometric tail count passed horizon");
                    }
                }
            }
            CountValue r = CountValue::finite(n);
            r.boundary_tie = cmp.tie_seen;
            return r;
        }
        case Family::PowerDecay: {
            double x = std::exp(-log_t / (2.0 * alpha_));  // m < x
            if (x > 4.6e18) return CountValue::horizon("count exceeds 2^62");
            return walk(static_cast<uint64_t>(std::max(0.0, x - 1.0)));
        }
        case Family::ShiftedPower: {
            if (beta_ == 0.0) {
                if (above(2)) return CountValue::infinite("constant sequence stays above threshold");
                CountValue r = CountValue::finite(above(1) ? 1 : 0);
                r.boundary_tie = cmp.tie_seen;
                return r;
            }
            double x = std::exp(-log_t / beta_) + 1.0;
            if (x > 4.6e18) return CountValue::horizon("count exceeds 2^62");
            return walk(static_cast<uint64_t>(std::max(0.0, x - 1.0)));
        }
        case Family::Geometric: {
            double x = 1.0 + (log_t - std::log(scale_.value)) / std::log(ratio_.value);  // m < x
            if (x > 4.6e18) return CountValue::horizon("count exceeds 2^62");
            return walk(static_cast<uint64_t>(std::max(0.0, x - 1.0)));
        }
        case Family::LogDecay: {
            // 1/ln(m+1) > t  <=>  m < exp(1/t) - 1
            double inv_t = std::exp(-log_t);
            if (inv_t > 700.0) return CountValue::horizon("count exceeds exp(700)");
            double x = std::exp(inv_t) - 1.0;
            if (x > 4.6e18) return CountValue::horizon("count exceeds 2^62");
            return walk(static_cast<uint64_t>(std::max(0.0, x)));
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace symtract
