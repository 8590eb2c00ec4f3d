#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symtract/complexity.hpp"
#include "symtract/spectrum.hpp"
#include "symtract/symmetry.hpp"
#include "symtract/tractability.hpp"

namespace symtract {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One JSON document drives a whole run; no numeric payloads on flags.
struct RunConfig {
    nlohmann::json raw;
    std::string hash;  // fnv1a-64 of the canonical dump, hex

    EigenSequence seq = EigenSequence::finite_rank({ExactReal(1.0)});
    std::optional<SymmetryStructure> structure;
    std::optional<StructureSchedule> schedule;

    ValueMode mode = ValueMode::Float;
    ErrorCriterion criterion = ErrorCriterion::Absolute;
    std::vector<ExactReal> eps;
    std::vector<uint64_t> ds;
    std::vector<uint64_t> ns;
    std::vector<double> tau_grid = default_tau_grid();
    double tau = 1.0;
    double r = 0.0;
    FRule f_rule;
    uint64_t d_max = 20;
    uint64_t seed = 0;
    uint64_t trials = 1000;
    uint64_t cube = 12;
    EnumLimits limits;
    std::map<MultiIndex, ExactReal> coefficients;

    static RunConfig parse_file(const std::string& path);
    static RunConfig parse(const nlohmann::json& j);

    /// The structure used for dimension d: the fixed one if it matches,
    /// otherwise the schedule rule.
    SymmetryStructure structure_for(uint64_t d) const;
    const StructureSchedule& require_schedule() const;
};

ExactReal exact_real_from_json(const nlohmann::json& j);
std::string format_index(const MultiIndex& k);
MultiIndex parse_index(const std::string& text);
uint64_t fnv1a64(const std::string& text);

}  // namespace symtract
