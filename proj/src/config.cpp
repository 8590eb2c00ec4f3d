#include "symtract/config.hpp"

#include <fstream>
#include <sstream>

namespace symtract {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing config key: ") + key);
    return *it;
}

std::vector<ExactReal> exact_list(const json& j) {
    if (!j.is_array()) fail("expected an array of values");
    std::vector<ExactReal> out;
    for (const auto& v : j) out.push_back(exact_real_from_json(v));
    return out;
}

EigenSequence parse_lambda(const json& j) {
    std::string family = require(j, "family").get<std::string>();
    if (family == "finite_rank") return EigenSequence::finite_rank(exact_list(require(j, "values")));
    if (family == "power_decay") return EigenSequence::power_decay(require(j, "alpha").get<double>());
    if (family == "shifted_power")
        return EigenSequence::shifted_power(require(j, "beta").get<double>());
    if (family == "geometric")
        return EigenSequence::geometric(exact_real_from_json(require(j, "ratio")),
                                        j.contains("scale") ? exact_real_from_json(j["scale"])
                                                            : ExactReal(1.0, Rational(1)));
    if (family == "log_decay") return EigenSequence::log_decay();
    if (family == "explicit") {
        ExplicitTail tail;
        if (j.contains("tail")) {
            const json& t = j["tail"];
            std::string rule = require(t, "rule").get<std::string>();
            if (rule == "zero") {
                tail.rule = TailRule::Zero;
            } else if (rule == "geometric") {
                tail.rule = TailRule::Geometric;
                tail.param = exact_real_from_json(require(t, "ratio"));
            } else if (rule == "constant") {
                tail.rule = TailRule::Constant;
                tail.param = exact_real_from_json(require(t, "value"));
            } else {
                fail("unknown tail rule: " + rule);
            }
        }
        return EigenSequence::explicit_list(exact_list(require(j, "values")), tail);
    }
    fail("unknown eigenvalue family: " + family);
}

GroupKind parse_kind(const json& j) {
    std::string k = j.get<std::string>();
    if (k == "symmetric" || k == "sym") return GroupKind::Symmetric;
    if (k == "antisymmetric" || k == "asy" || k == "antisym") return GroupKind::Antisymmetric;
    fail("unknown group kind: " + k);
}

SymmetryStructure parse_structure(const json& j) {
    auto d = require(j, "d").get<uint64_t>();
    std::vector<Group> groups;
    if (j.contains("groups")) {
        for (const auto& gj : j["groups"]) {
            Group g;
            g.kind = parse_kind(require(gj, "kind"));
            g.indices = require(gj, "indices").get<std::vector<uint64_t>>();
            groups.push_back(std::move(g));
        }
    }
    return SymmetryStructure(d, std::move(groups));
}

StructureSchedule parse_schedule(const json& j) {
    StructureSchedule s;
    std::string rule = require(j, "rule").get<std::string>();
    using Rule = StructureSchedule::Rule;
    if (rule == "entire") s.rule = Rule::Entire;
    else if (rule == "fully_symmetric") s.rule = Rule::FullySymmetric;
    else if (rule == "fully_antisymmetric") s.rule = Rule::FullyAntisymmetric;
    else if (rule == "fixed_free") s.rule = Rule::FixedFree;
    else if (rule == "log_free") s.rule = Rule::LogFree;
    else if (rule == "grouped_wave") s.rule = Rule::GroupedWave;
    else if (rule == "constant_antisym") s.rule = Rule::ConstantAntisym;
    else if (rule == "log_quotient_antisym") s.rule = Rule::LogQuotientAntisym;
    else fail("unknown schedule rule: " + rule);
    if (j.contains("kind")) s.kind = parse_kind(j["kind"]);
    if (j.contains("param")) s.param = j["param"].get<double>();
    if ((s.rule == Rule::FixedFree || s.rule == Rule::LogFree) && !j.contains("kind"))
        fail("schedule rule needs a group kind");
    return s;
}

}  // namespace

ExactReal exact_real_from_json(const nlohmann::json& j) {
    try {
        if (j.is_string()) return ExactReal::from_string(j.get<std::string>());
        if (j.is_number_integer())
            return ExactReal(static_cast<double>(j.get<int64_t>()), Rational(j.get<int64_t>()));
        if (j.is_number_float()) {
            // the shortest round-trip decimal gives the intended literal
            ExactReal r = ExactReal::from_string(j.dump());
            return r;
        }
    } catch (const std::invalid_argument& e) {
        fail(std::string("bad numeric literal: ") + e.what());
    }
    fail("expected a number or a rational string");
}

std::string format_index(const MultiIndex& k) {
    std::ostringstream os;
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    return os.str();
}

MultiIndex parse_index(const std::string& text) {
    MultiIndex out;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') {
            if (cur.empty()) fail("bad multi-index: " + text);
            out.push_back(std::stoull(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::stoull(cur));
    if (out.empty()) fail("bad multi-index: " + text);
    return out;
}

uint64_t fnv1a64(const std::string& text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    return parse(j);
}

RunConfig RunConfig::parse(const json& j) {
    RunConfig cfg;
    cfg.raw = j;
    {
        std::ostringstream os;
        os << std::hex << fnv1a64(j.dump());
        cfg.hash = os.str();
    }
    try {
        cfg.seq = parse_lambda(require(j, "lambda"));
    } catch (const std::invalid_argument& e) {
        fail(std::string("bad lambda: ") + e.what());
    }

    if (j.contains("structure")) {
        try {
            cfg.structure = parse_structure(j["structure"]);
        } catch (const std::invalid_argument& e) {
            fail(std::string("bad structure: ") + e.what());
        }
    }
    if (j.contains("schedule")) cfg.schedule = parse_schedule(j["schedule"]);
    if (!cfg.structure && !cfg.schedule) fail("config needs a structure or a schedule");

    if (j.contains("mode")) {
        std::string m = j["mode"].get<std::string>();
        if (m == "float") cfg.mode = ValueMode::Float;
        else if (m == "rational") cfg.mode = ValueMode::Rational;
        else fail("mode must be float or rational");
    }
    if (cfg.mode == ValueMode::Rational && !cfg.seq.rational_capable())
        fail("rational mode rejected: the eigenvalue family has no exact representation");

    if (j.contains("criterion")) {
        std::string c = j["criterion"].get<std::string>();
        if (c == "absolute") cfg.criterion = ErrorCriterion::Absolute;
        else if (c == "normalized") cfg.criterion = ErrorCriterion::Normalized;
        else fail("criterion must be absolute or normalized");
    }

    if (j.contains("eps")) cfg.eps = exact_list(j["eps"]);
    if (cfg.mode == ValueMode::Rational)
        for (const auto& e : cfg.eps)
            if (!e.exact) fail("rational mode requires exact eps values");
    if (j.contains("d")) cfg.ds = j["d"].get<std::vector<uint64_t>>();
    if (j.contains("n")) cfg.ns = j["n"].get<std::vector<uint64_t>>();
    if (j.contains("tau_grid")) {
        cfg.tau_grid = j["tau_grid"].get<std::vector<double>>();
        if (cfg.tau_grid.empty()) fail("tau_grid must be non-empty");
    }
    if (j.contains("tau")) cfg.tau = j["tau"].get<double>();
    if (j.contains("r")) cfg.r = j["r"].get<double>();
    if (j.contains("f_rule")) {
        const json& f = j["f_rule"];
        if (f.contains("c")) cfg.f_rule.c = f["c"].get<double>();
        if (f.contains("q")) cfg.f_rule.q = f["q"].get<double>();
    }
    if (j.contains("d_max")) cfg.d_max = j["d_max"].get<uint64_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<uint64_t>();
    if (j.contains("cube")) cfg.cube = j["cube"].get<uint64_t>();
    if (j.contains("horizon")) cfg.limits.value_horizon = j["horizon"].get<uint64_t>();
    if (j.contains("leaf_budget")) cfg.limits.leaf_budget = j["leaf_budget"].get<uint64_t>();

    if (j.contains("coefficients")) {
        for (const auto& [key, val] : j["coefficients"].items())
            cfg.coefficients[parse_index(key)] = exact_real_from_json(val);
    }
    return cfg;
}

SymmetryStructure RunConfig::structure_for(uint64_t d) const {
    if (structure && structure->d() == d) return *structure;
    if (schedule) return schedule->at(d);
    if (structure) fail("structure dimension does not match requested d");
    fail("no structure available");
}

const StructureSchedule& RunConfig::require_schedule() const {
    if (!schedule) fail("this command needs a schedule");
    return *schedule;
}

}  // namespace symtract
