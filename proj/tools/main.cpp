// Command-line front end. All real work lives in the core library; this file
// only maps subcommands and flags onto it.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "swarmconn/commands.hpp"
#include "swarmconn/verifier.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Connectivity-preserving swarm controller: scenario checks, simulation, and numeric fact sweeps"};
    app.require_subcommand(1);

    std::string scenario_path;
    bool dump_normalized = false;
    auto* check = app.add_subcommand("check", "Validate a scenario against every load-time constraint");
    check->add_option("scenario", scenario_path, "Scenario file")->required();
    check->add_flag("--dump-normalized", dump_normalized, "Print the canonical scenario text after the report");

    std::string sim_path;
    std::string sim_output;
    auto* simulate = app.add_subcommand("simulate", "Run a scenario and write the trace CSV");
    simulate->add_option("scenario", sim_path, "Scenario file")->required();
    simulate->add_option("-o,--output", sim_output, "Trace destination (overrides the scenario's output key)");

    swarmconn::VerifyOptions vopts;
    std::string verify_csv;
    auto* verify = app.add_subcommand("verify", "Monte-Carlo sweep over the numeric facts the analysis rests on");
    verify->add_option("--seed", vopts.seed, "Master seed for the sweep");
    verify->add_option("--budget", vopts.budget, "Accepted samples per fact");
    verify->add_option("-o,--output", verify_csv, "Also write the reports as CSV");
    verify->add_option("--margin-offset", vopts.margin_offset, "Bias added to every worst margin (test hook)")
        ->group("");  // hidden

    int ratio_max = 150;
    std::string ratio_csv;
    auto* ratio = app.add_subcommand("ratio", "Spread-limit ratio of the built-in potential kinds per edge count");
    ratio->add_option("--max", ratio_max, "Largest edge count to tabulate");
    ratio->add_option("-o,--output", ratio_csv, "Write the table as CSV instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help lands here too; keep its conventional success status.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed()) return swarmconn::cmd_check(scenario_path, dump_normalized, std::cout);
    if (simulate->parsed()) return swarmconn::cmd_simulate(sim_path, sim_output, std::cout);
    if (verify->parsed()) return swarmconn::cmd_verify(vopts, verify_csv, std::cout);
    if (ratio->parsed()) return swarmconn::cmd_ratio(ratio_max, ratio_csv, std::cout);
    return 2;
}
