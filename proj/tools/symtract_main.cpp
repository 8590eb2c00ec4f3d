#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "symtract/commands.hpp"

namespace {

struct SubArgs {
    std::string config;
    std::string out;
    std::string format = "csv";
};

void attach_common(CLI::App* cmd, SubArgs& args) {
    cmd->add_option("--config", args.config, "path to the JSON run config")->required();
    cmd->add_option("--out", args.out, "output file (stdout when omitted)");
    cmd->add_option("--format", args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

int emit(const symtract::CommandResult& result, const SubArgs& args) {
    std::string text = args.format == "json" ? symtract::to_jsonl(result.table)
                                             : symtract::to_csv(result.table);
    if (args.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file: " << args.out << "\n";
            return 2;
        }
        out << text;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra, errors, information complexity and tractability of "
                 "(anti-)symmetric linear tensor product problems"};
    app.require_subcommand(1);

    std::map<std::string, SubArgs> args;
    std::map<std::string, symtract::CommandResult (*)(const symtract::RunConfig&)> handlers = {
        {"complexity", symtract::cmd_complexity}, {"errors", symtract::cmd_errors},
        {"classify", symtract::cmd_classify},     {"verify", symtract::cmd_verify},
        {"simulate", symtract::cmd_simulate},     {"project", symtract::cmd_project},
    };
    std::map<std::string, std::string> help = {
        {"complexity", "information complexity tables (count, recursion, closed form)"},
        {"errors", "n-th minimal errors and initial errors"},
        {"classify", "tractability classification report"},
        {"verify", "run the invariant batteries and report pass/fail"},
        {"simulate", "empirical worst-case probes of the optimal algorithm"},
        {"project", "apply the structure's (anti-)symmetrizers to coefficients"},
    };
    for (auto& [name, fn] : handlers) attach_common(app.add_subcommand(name, help[name]), args[name]);

    CLI11_PARSE(app, argc, argv);

    for (auto& [name, fn] : handlers) {
        if (!app.get_subcommand(name)->parsed()) continue;
        const SubArgs& a = args[name];
        try {
            symtract::RunConfig cfg = symtract::RunConfig::parse_file(a.config);
            return emit(fn(cfg), a);
        } catch (const symtract::ConfigError& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return 2;
        } catch (const std::invalid_argument& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    return 2;
}
