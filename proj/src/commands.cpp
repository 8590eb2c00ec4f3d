#include "symtract/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "symtract/optimal.hpp"
#include "symtract/parallel.hpp"

namespace symtract {

namespace {

using nlohmann::json;

json count_cell(const CountValue& c) {
    switch (c.kind) {
        case CountValue::Kind::Finite: return c.count;
        case CountValue::Kind::Infinite: return "infinite";
        case CountValue::Kind::HorizonExceeded: return "horizon";
    }
    return nullptr;
}

bool is_fully_antisymmetric(const SymmetryStructure& st) {
    if (st.d() == 1) return true;  // no constraint in one dimension
    return st.groups().size() == 1 && st.groups()[0].kind == GroupKind::Antisymmetric &&
           st.groups()[0].indices.size() == st.d();
}

std::optional<FullKind> closed_form_kind(const SymmetryStructure& st) {
    if (st.is_entire()) return FullKind::Entire;
    if (st.groups().size() == 1 && st.groups()[0].indices.size() == st.d())
        return st.groups()[0].kind == GroupKind::Symmetric ? FullKind::Symmetric
                                                           : FullKind::Antisymmetric;
    return std::nullopt;
}

bool all_unit_values(const EigenSequence& seq) {
    if (seq.family() != Family::FiniteRank) return false;
    uint64_t rank = seq.finite_rank_bound();
    for (uint64_t m = 1; m <= rank; ++m)
        if (seq.value(m) != 1.0) return false;
    return rank >= 1;
}

std::string eps_text(const ExactReal& e) {
    if (e.exact) return to_string(*e.exact);
    std::ostringstream os;
    os << e.value;
    return os.str();
}

}  // namespace

void Table::add_row(std::vector<json> cells) {
    if (cells.size() != columns.size()) throw std::logic_error("row width mismatch");
    rows.push_back(std::move(cells));
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    auto emit_cell = [&os](const json& c) {
        if (c.is_string()) {
            std::string s = c.get<std::string>();
            if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
                os << '"';
                for (char ch : s) {
                    if (ch == '"') os << '"';
                    os << ch;
                }
                os << '"';
            } else {
                os << s;
            }
        } else {
            os << c.dump();
        }
    };
    for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            emit_cell(row[i]);
        }
        os << "\n";
    }
    return os.str();
}

std::string to_jsonl(const Table& t) {
    std::ostringstream os;
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
        os << obj.dump() << "\n";
    }
    return os.str();
}

namespace {

std::vector<uint64_t> dims_of(const RunConfig& cfg) {
    if (!cfg.ds.empty()) return cfg.ds;
    if (cfg.structure) return {cfg.structure->d()};
    throw ConfigError("config needs a d list or a fixed structure");
}

Threshold command_threshold(const RunConfig& cfg, const Problem& p, const ExactReal& eps) {
    if (cfg.criterion == ErrorCriterion::Absolute) return Threshold::from_eps(eps, cfg.mode);
    if (!(eps.value < 1.0)) throw ConfigError("normalized criterion requires eps < 1");
    Threshold t;
    t.log_t = LogVal::from_log(2.0 * std::log(eps.value) + log_initial_error_sq(p));
    if (cfg.mode == ValueMode::Rational) {
        const Rational& q = eps.require_exact("eps");
        t.rat_t = q * q * initial_error_sq_exact(p);
    }
    return t;
}

}  // namespace

CommandResult cmd_complexity(const RunConfig& cfg) {
    if (cfg.eps.empty()) throw ConfigError("complexity needs an eps list");
    auto dims = dims_of(cfg);

    CommandResult out;
    out.table.columns = {"d", "eps", "criterion", "method", "n", "agreement", "note", "mode", "config"};

    struct Cell {
        std::vector<std::vector<json>> rows;
        bool nonfinite = false;
    };
    std::vector<Cell> cells(dims.size() * cfg.eps.size());

    parallel_for(cells.size(), [&](size_t t) {
        uint64_t d = dims[t / cfg.eps.size()];
        const ExactReal& eps = cfg.eps[t % cfg.eps.size()];
        SymmetryStructure st = cfg.structure_for(d);
        Problem p{st, cfg.seq};
        const char* crit = cfg.criterion == ErrorCriterion::Absolute ? "absolute" : "normalized";

        CountValue count = info_complexity(p, eps, cfg.criterion, cfg.mode, cfg.limits);
        std::vector<std::pair<std::string, CountValue>> results{{"count", count}};

        if (is_fully_antisymmetric(st)) {
            Threshold thr = command_threshold(cfg, p, eps);
            CountValue rec = exact_antisymmetric_count_threshold(cfg.seq, d, thr, cfg.limits);
            results.emplace_back("recursion", rec);
        }
        if (cfg.criterion == ErrorCriterion::Absolute && all_unit_values(cfg.seq) &&
            eps.value < 1.0) {
            if (auto kind = closed_form_kind(st)) {
                CountValue cf =
                    CountValue::finite(closed_form_finite_rank(cfg.seq.finite_rank_bound(), d,
                                                               *kind, eps.value));
                results.emplace_back("closed_form", cf);
            }
        }
        bool agreement = true;
        for (const auto& [name, c] : results)
            agreement = agreement && c.kind == count.kind &&
                        (c.kind != CountValue::Kind::Finite || c.count == count.count);

        Cell& cell = cells[t];
        for (const auto& [name, c] : results) {
            cell.nonfinite = cell.nonfinite || c.kind != CountValue::Kind::Finite;
            cell.rows.push_back({d, eps_text(eps), crit, name, count_cell(c), agreement, c.note,
                                 to_string(cfg.mode), cfg.hash});
        }
    });

    for (auto& c : cells) {
        for (auto& r : c.rows) out.table.rows.push_back(std::move(r));
        if (c.nonfinite) out.exit_code = 3;
    }
    return out;
}

CommandResult cmd_errors(const RunConfig& cfg) {
    if (cfg.ns.empty()) throw ConfigError("errors needs an n list");
    auto dims = dims_of(cfg);

    CommandResult out;
    out.table.columns = {"d", "n", "error", "initial_error", "mode", "config"};
    std::vector<std::vector<std::vector<json>>> per_d(dims.size());

    parallel_for(dims.size(), [&](size_t i) {
        uint64_t d = dims[i];
        SymmetryStructure st = cfg.structure_for(d);
        Problem p{st, cfg.seq};
        double init = initial_error(p);
        uint64_t n_max = *std::max_element(cfg.ns.begin(), cfg.ns.end());
        // one stream pass per dimension
        std::vector<double> log_values;
        SpectrumStream stream(st, cfg.seq, cfg.mode);
        for (uint64_t v = 0; v <= n_max; ++v) {
            auto item = stream.next();
            if (!item) break;
            log_values.push_back(item->log_value);
        }
        for (uint64_t n : cfg.ns) {
            double e = n < log_values.size() ? std::exp(0.5 * log_values[n]) : 0.0;
            per_d[i].push_back({d, n, e, init, to_string(cfg.mode), cfg.hash});
        }
    });
    for (auto& rows : per_d)
        for (auto& r : rows) out.table.rows.push_back(std::move(r));
    return out;
}

CommandResult cmd_classify(const RunConfig& cfg) {
    const StructureSchedule& sched = cfg.require_schedule();
    TractabilityReport rep = classify(sched, cfg.seq, cfg.criterion, cfg.tau_grid);
    CommandResult out;
    out.table.columns = {"verdict", "criterion", "clause", "witnesses", "schedule", "lambda",
                         "mode", "config"};
    json witnesses = json::object();
    for (const auto& [k, v] : rep.witnesses) witnesses[k] = v;
    out.table.add_row({to_string(rep.verdict),
                       rep.criterion == ErrorCriterion::Absolute ? "absolute" : "normalized",
                       rep.clause, witnesses, sched.name(), cfg.seq.describe(),
                       to_string(cfg.mode), cfg.hash});
    return out;
}

CommandResult cmd_simulate(const RunConfig& cfg) {
    if (cfg.ns.empty()) throw ConfigError("simulate needs an n list");
    auto dims = dims_of(cfg);

    CommandResult out;
    out.table.columns = {"d",       "n",       "nth_error", "empirical_max", "witness_error",
                         "witness", "trials",  "seed",      "mode",          "config"};
    std::vector<std::vector<std::vector<json>>> per(dims.size() * cfg.ns.size());

    parallel_for(per.size(), [&](size_t t) {
        uint64_t d = dims[t / cfg.ns.size()];
        uint64_t n = cfg.ns[t % cfg.ns.size()];
        SymmetryStructure st = cfg.structure_for(d);
        Problem p{st, cfg.seq};
        WorstCaseProbe probe = empirical_worst_case(p, n, cfg.trials, cfg.seed, cfg.mode);
        per[t].push_back({d, n, probe.nth_error, probe.empirical_max, probe.witness_error,
                          probe.witness ? json(format_index(*probe.witness)) : json(nullptr),
                          cfg.trials, cfg.seed, to_string(cfg.mode), cfg.hash});
    });
    for (auto& rows : per)
        for (auto& r : rows) out.table.rows.push_back(std::move(r));
    return out;
}

CommandResult cmd_project(const RunConfig& cfg) {
    if (!cfg.structure) throw ConfigError("project needs a fixed structure");
    if (cfg.coefficients.empty()) throw ConfigError("project needs a coefficients map");

    CommandResult out;
    out.table.columns = {"index", "coefficient", "mode", "config"};
    if (cfg.mode == ValueMode::Rational) {
        ExactCoefficients in;
        for (const auto& [k, v] : cfg.coefficients) in.add(k, v.require_exact("coefficient"));
        ExactCoefficients res = project_all(*cfg.structure, in);
        for (const auto& [k, c] : res.entries)
            out.table.add_row({format_index(k), to_string(c), "rational", cfg.hash});
    } else {
        SparseCoefficients in;
        for (const auto& [k, v] : cfg.coefficients) in.add(k, v.value);
        SparseCoefficients res = project_all(*cfg.structure, in);
        for (const auto& [k, c] : res.entries)
            out.table.add_row({format_index(k), c, "float", cfg.hash});
    }
    return out;
}

// ---------------------------------------------------------------------------
// verification battery

namespace {

struct BatteryFixture {
    std::string name;
    EigenSequence seq;
    bool rational;
};

std::vector<BatteryFixture> battery_sequences() {
    std::vector<BatteryFixture> v;
    v.push_back({"finite_rank_2_ones", EigenSequence::finite_rank({ExactReal(1.0, Rational(1)),
                                                                   ExactReal(1.0, Rational(1))}),
                 true});
    v.push_back({"finite_rank_4_ones",
                 EigenSequence::finite_rank(std::vector<ExactReal>(4, ExactReal(1.0, Rational(1)))),
                 true});
    v.push_back({"finite_rank_mixed",
                 EigenSequence::finite_rank({ExactReal(1.0, Rational(1)),
                                             ExactReal(0.5, Rational(1, 2)),
                                             ExactReal(0.25, Rational(1, 4))}),
                 true});
    v.push_back({"power_decay_1", EigenSequence::power_decay(1.0), true});
    v.push_back({"power_decay_half", EigenSequence::power_decay(0.5), true});
    v.push_back({"geometric_half",
                 EigenSequence::geometric(ExactReal(0.5, Rational(1, 2)), ExactReal(1.0, Rational(1))),
                 true});
    return v;
}

std::vector<SymmetryStructure> battery_structures(uint64_t d) {
    std::vector<SymmetryStructure> v;
    v.push_back(SymmetryStructure::entire(d));
    if (d >= 2) {
        v.push_back(SymmetryStructure::fully_symmetric(d));
        v.push_back(SymmetryStructure::fully_antisymmetric(d));
    }
    if (d >= 3) {
        Group g;
        g.kind = GroupKind::Antisymmetric;
        g.indices = {1, 2};
        v.push_back(SymmetryStructure(d, {g}));
    }
    return v;
}

const std::vector<ExactReal>& battery_eps() {
    static const std::vector<ExactReal> eps = {
        ExactReal(0.3, Rational(3, 10)), ExactReal(0.5, Rational(1, 2)),
        ExactReal(0.9, Rational(9, 10)), ExactReal(0.05, Rational(1, 20))};
    return eps;
}

VerifyCheck check_constructor_rejections() {
    VerifyCheck c{"constructor_rejects_bad_sequences", 0, 0, ""};
    auto expect_throw = [&](auto&& fn) {
        ++c.cases;
        try {
            fn();
            ++c.failures;
        } catch (const std::invalid_argument&) {
        }
    };
    expect_throw([] { EigenSequence::finite_rank({ExactReal(0.5), ExactReal(1.0)}); });
    expect_throw([] { EigenSequence::finite_rank({ExactReal(1.0), ExactReal(-0.1)}); });
    expect_throw([] { EigenSequence::finite_rank({ExactReal(0.0)}); });
    expect_throw([] { EigenSequence::power_decay(0.0); });
    expect_throw([] { EigenSequence::geometric(ExactReal(1.5), ExactReal(1.0)); });
    return c;
}

VerifyCheck check_count_vs_cube() {
    VerifyCheck c{"count_matches_cube_oracle", 0, 0, ""};
    for (const auto& fx : battery_sequences()) {
        for (uint64_t d = 1; d <= 4; ++d) {
            for (const auto& st : battery_structures(d)) {
                for (const auto& eps : battery_eps()) {
                    for (ValueMode mode : {ValueMode::Float, ValueMode::Rational}) {
                        if (mode == ValueMode::Rational && !fx.rational) continue;
                        BruteForceCount oracle = brute_force_count(st, fx.seq, eps, 12, mode);
                        if (!oracle.certified) continue;
                        ++c.cases;
                        CountValue fast = count_above(st, fx.seq, eps, mode);
                        if (!fast.is_finite() || fast.count != oracle.count) ++c.failures;
                    }
                }
            }
        }
    }
    return c;
}

VerifyCheck check_recursion_vs_count() {
    VerifyCheck c{"recursion_matches_count", 0, 0, ""};
    for (const auto& fx : battery_sequences()) {
        for (uint64_t d = 1; d <= 5; ++d) {
            auto st = SymmetryStructure::fully_antisymmetric(d);
            for (const auto& eps : battery_eps()) {
                for (ValueMode mode : {ValueMode::Float, ValueMode::Rational}) {
                    if (mode == ValueMode::Rational && !fx.rational) continue;
                    ++c.cases;
                    CountValue fast = count_above(st, fx.seq, eps, mode);
                    CountValue rec = exact_antisymmetric_count(fx.seq, d, eps, mode);
                    bool ok = fast.kind == rec.kind &&
                              (fast.kind != CountValue::Kind::Finite || fast.count == rec.count);
                    if (!ok) ++c.failures;
                }
            }
        }
    }
    return c;
}

ExactCoefficients random_rational_coeffs(std::mt19937_64& eng, uint64_t d, int entries) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<uint64_t> val(1, 4);
    ExactCoefficients out;
    for (int i = 0; i < entries; ++i) {
        MultiIndex k(d);
        for (auto& v : k) v = val(eng);
        int n = num(eng);
        if (n == 0) n = 1;
        out.add(k, Rational(n, den(eng)));
    }
    return out;
}

VerifyCheck check_projector_algebra(uint64_t seed) {
    VerifyCheck c{"projector_algebra_exact", 0, 0, ""};
    std::mt19937_64 eng(seed);
    for (uint64_t d = 2; d <= 4; ++d) {
        for (GroupKind kind : {GroupKind::Symmetric, GroupKind::Antisymmetric}) {
            auto st = kind == GroupKind::Symmetric ? SymmetryStructure::fully_symmetric(d)
                                                   : SymmetryStructure::fully_antisymmetric(d);
            for (int rep = 0; rep < 10; ++rep) {
                ExactCoefficients x = random_rational_coeffs(eng, d, 5);
                ExactCoefficients px = project_all(st, x);
                ExactCoefficients ppx = project_all(st, px);
                ++c.cases;
                if (px.entries != ppx.entries) ++c.failures;  // idempotence, exact
                ++c.cases;
                Rational in_norm = 0, out_norm = 0;
                for (const auto& [k, v] : x.entries) in_norm += v * v;
                for (const auto& [k, v] : px.entries) out_norm += v * v;
                if (out_norm > in_norm) ++c.failures;  // ‖P‖ <= 1
            }
        }
    }
    return c;
}

VerifyCheck check_xi_orthonormal() {
    VerifyCheck c{"xi_basis_orthonormal", 0, 0, ""};
    for (uint64_t d = 2; d <= 3; ++d) {
        for (GroupKind kind : {GroupKind::Symmetric, GroupKind::Antisymmetric}) {
            auto st = kind == GroupKind::Symmetric ? SymmetryStructure::fully_symmetric(d)
                                                   : SymmetryStructure::fully_antisymmetric(d);
            std::vector<MultiIndex> canon;
            MultiIndex k(d, 1);
            // enumerate canonical indices with entries <= 5
            std::function<void(size_t, uint64_t)> gen = [&](size_t pos, uint64_t lo) {
                if (pos == d) {
                    canon.push_back(k);
                    return;
                }
                for (uint64_t v = lo; v <= 5; ++v) {
                    k[pos] = v;
                    gen(pos + 1, kind == GroupKind::Antisymmetric ? v + 1 : v);
                }
            };
            gen(0, 1);
            for (size_t i = 0; i < canon.size(); ++i) {
                ExactCoefficients xi = xi_expansion(st, canon[i]);
                for (size_t j = i; j < canon.size(); ++j) {
                    ExactCoefficients xj = xi_expansion(st, canon[j]);
                    Rational ip2 = ExactCoefficients::inner_product_squared(xi, xj);
                    ++c.cases;
                    if (i == j ? ip2 != 1 : ip2 != 0) ++c.failures;
                }
            }
        }
    }
    return c;
}

VerifyCheck check_annihilation() {
    VerifyCheck c{"antisymmetrizer_annihilates_repeats", 0, 0, ""};
    for (uint64_t d = 2; d <= 4; ++d) {
        auto st = SymmetryStructure::fully_antisymmetric(d);
        MultiIndex k(d, 1);
        k.back() = 2;  // repeated entries inside the group
        ExactCoefficients x;
        x.add(k, 1);
        ExactCoefficients px = project_all(st, x);
        ++c.cases;
        if (!px.entries.empty()) ++c.failures;
    }
    return c;
}

VerifyCheck check_stream_and_count() {
    VerifyCheck c{"stream_matches_count", 0, 0, ""};
    for (const auto& fx : battery_sequences()) {
        for (uint64_t d = 1; d <= 3; ++d) {
            for (const auto& st : battery_structures(d)) {
                SpectrumStream stream(st, fx.seq, ValueMode::Float);
                std::vector<double> logs;
                for (int i = 0; i < 600; ++i) {
                    auto item = stream.next();
                    if (!item) break;
                    logs.push_back(item->log_value);
                }
                ++c.cases;
                for (size_t i = 1; i < logs.size(); ++i)
                    if (logs[i] > logs[i - 1] + 1e-9) ++c.failures;
                for (const auto& eps : battery_eps()) {
                    CountValue n = count_above(st, fx.seq, eps, ValueMode::Float);
                    if (!n.is_finite() || n.count >= logs.size()) continue;
                    ++c.cases;
                    double log_t = 2.0 * std::log(eps.value);
                    uint64_t from_stream = 0;
                    for (double lg : logs)
                        if (lg > log_t + 1e-12) ++from_stream;
                    if (from_stream != n.count) ++c.failures;
                }
            }
        }
    }
    return c;
}

VerifyCheck check_pythagoras(uint64_t seed) {
    VerifyCheck c{"pythagoras_and_witness", 0, 0, ""};
    std::mt19937_64 eng(seed ^ 0xabcdef);
    for (const auto& fx : battery_sequences()) {
        for (uint64_t d : {2, 3}) {
            auto st = SymmetryStructure::fully_antisymmetric(d);
            Problem p{st, fx.seq};
            auto top = top_eigenvalues(st, fx.seq, 24, ValueMode::Float);
            if (top.empty()) continue;
            for (uint64_t n : {uint64_t(0), uint64_t(2)}) {
                std::normal_distribution<double> normal;
                ProblemElement f;
                for (const auto& item : top) f.add(item.index, normal(eng));
                double norm = std::sqrt(f.norm2());
                for (auto& [k, v] : f.coeffs) v /= norm;
                double image2 = 0.0;
                for (const auto& item : top) {
                    auto it = f.coeffs.find(item.index);
                    if (it != f.coeffs.end()) image2 += it->second * it->second * item.value;
                }
                double approx2 = apply_optimal(p, f, n).norm2();
                double res = residual_error(p, f, n);
                ++c.cases;
                if (std::fabs(image2 - (approx2 + res * res)) > 1e-12 * std::max(1.0, image2))
                    ++c.failures;
                ++c.cases;
                if (res > nth_minimal_error(p, n) + 1e-12) ++c.failures;
                WorstCaseProbe probe = empirical_worst_case(p, n, 8, seed);
                ++c.cases;
                if (probe.witness &&
                    std::fabs(probe.witness_error - probe.nth_error) >
                        1e-12 * std::max(1.0, probe.nth_error))
                    ++c.failures;
            }
        }
    }
    return c;
}

VerifyCheck check_appendix(uint64_t seed) {
    VerifyCheck c{"appendix_inequality_random", 0, 0, ""};
    std::mt19937_64 eng(seed ^ 0x5eed);
    std::uniform_int_distribution<int> num(0, 8);
    std::uniform_int_distribution<uint64_t> dd(1, 5), vv(0, 3), len(1, 6);
    for (int rep = 0; rep < 200; ++rep) {
        uint64_t m = len(eng);
        std::vector<int> raw(m);
        for (auto& x : raw) x = num(eng);
        std::sort(raw.rbegin(), raw.rend());
        if (raw[0] == 0) raw[0] = 1;
        std::vector<ExactReal> mu;
        for (int x : raw) mu.emplace_back(x / 8.0, Rational(x, 8));
        uint64_t d = dd(eng), V = vv(eng);
        AppendixCheck chk = verify_appendix_inequality(mu, d, V);
        ++c.cases;
        if (!chk.holds || !chk.exact) ++c.failures;
        AppendixCheck at_zero = verify_appendix_inequality(mu, d, 0);
        ++c.cases;
        if (!at_zero.equality) ++c.failures;
    }
    return c;
}

VerifyCheck check_boundary_tie() {
    VerifyCheck c{"float_boundary_tie_flagged", 0, 0, ""};
    auto seq = EigenSequence::finite_rank({ExactReal(1.0, Rational(1)), ExactReal(1.0, Rational(1))});
    auto st = SymmetryStructure::entire(3);
    CountValue n = count_above(st, seq, ExactReal(1.0, Rational(1)), ValueMode::Float);
    ++c.cases;
    if (!(n.is_finite() && n.count == 0 && n.boundary_tie)) ++c.failures;
    c.note = n.boundary_tie ? "tie at eps^2 = lambda flagged" : "no tie flag";
    CountValue exact = count_above(st, seq, ExactReal(1.0, Rational(1)), ValueMode::Rational);
    ++c.cases;
    if (!(exact.is_finite() && exact.count == 0)) ++c.failures;
    return c;
}

}  // namespace

std::vector<VerifyCheck> run_verification_battery(uint64_t seed) {
    std::vector<VerifyCheck> checks;
    checks.push_back(check_constructor_rejections());
    checks.push_back(check_count_vs_cube());
    checks.push_back(check_recursion_vs_count());
    checks.push_back(check_projector_algebra(seed));
    checks.push_back(check_xi_orthonormal());
    checks.push_back(check_annihilation());
    checks.push_back(check_stream_and_count());
    checks.push_back(check_pythagoras(seed));
    checks.push_back(check_appendix(seed));
    checks.push_back(check_boundary_tie());
    return checks;
}

CommandResult cmd_verify(const RunConfig& cfg) {
    CommandResult out;
    out.table.columns = {"check", "cases", "failures", "status", "note", "mode", "config"};
    for (const auto& c : run_verification_battery(cfg.seed)) {
        out.table.add_row({c.name, c.cases, c.failures, c.failures == 0 ? "pass" : "fail", c.note,
                           to_string(cfg.mode), cfg.hash});
        if (c.failures > 0) out.exit_code = 1;
    }
    return out;
}

}  // namespace symtract
