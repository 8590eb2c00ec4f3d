#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symtract/config.hpp"

namespace symtract {

/// Machine-readable result rows; cells keep their JSON types so both the
/// CSV and the JSON-lines emitters stay byte-deterministic.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;

    void add_row(std::vector<nlohmann::json> cells);
};

std::string to_csv(const Table& t);
std::string to_jsonl(const Table& t);

struct CommandResult {
    Table table;
    int exit_code = 0;
};

CommandResult cmd_complexity(const RunConfig& cfg);
CommandResult cmd_errors(const RunConfig& cfg);
CommandResult cmd_classify(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_simulate(const RunConfig& cfg);
CommandResult cmd_project(const RunConfig& cfg);

struct VerifyCheck {
    std::string name;
    uint64_t cases = 0;
    uint64_t failures = 0;
    std::string note;
};

/// Desk-scale invariant batteries: fast count vs cube oracle, recursion vs
/// count, projector algebra, spectral identities, the appendix inequality.
std::vector<VerifyCheck> run_verification_battery(uint64_t seed);

}  // namespace symtract
