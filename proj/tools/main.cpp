// tpt: three-party teleportation simulator and optimizer.
//
// Subcommands:
//   run       simulate one configuration, all eight (j,k) branches + averages
//   table     recompute the full reference registry and diff it
//   search    exhaustive sweep over all 65,536 Pauli correction tables
//   optimize  closed-form best (nu, kappa) for a scenario and table

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "tpt/cli.hpp"

namespace {

struct CommonArgs {
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "Output format: json, csv, markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
    cmd->add_option("--out", args.out, "Write the report to a file instead of stdout");
}

int emit(const tpt::cli::CommandResult& result, const CommonArgs& args) {
    const std::string text = tpt::render(result.doc, *tpt::parse_format(args.format));
    if (args.out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(args.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << args.out << " for writing\n";
            return tpt::cli::kExitUsage;
        }
        f << text;
    }
    return result.exit_code;
}

struct ScenarioArgs {
    std::string state;
    std::string roles;

    tpt::Scenario parse() const {
        auto tag = tpt::parse_state_tag(state);
        if (!tag) throw CLI::ValidationError("--state", "unknown state tag '" + state + "'");
        auto r = tpt::parse_roles(roles);
        if (!r) {
            throw CLI::ValidationError(
                "--roles", "expected a permutation of A,B,C (sender,cosender,receiver)");
        }
        return tpt::Scenario{*tag, *r};
    }
};

void add_scenario(CLI::App* cmd, ScenarioArgs& args) {
    cmd->add_option("--state", args.state, "State tag (2aI..5, W-std)")->required();
    cmd->add_option("--roles", args.roles, "sender,cosender,receiver, e.g. B,A,C")->required();
}

tpt::CorrectionTable parse_table_arg(const std::string& protocol) {
    if (auto name = tpt::parse_protocol_name(protocol)) {
        return tpt::named_protocol(*name);
    }
    if (auto table = tpt::CorrectionTable::parse(protocol)) {
        return *table;
    }
    throw CLI::ValidationError("--protocol",
                               "expected GHZ, W-I, W-II or 8 letters from {I,X,Y,Z}");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-party quantum teleportation: simulation, reference table, "
                 "exhaustive protocol search, and best-measurement optimization"};
    app.require_subcommand(1);

    // run
    ScenarioArgs run_scenario;
    CommonArgs run_common;
    std::string run_protocol = "GHZ";
    double nu = 0.0, kappa = 0.0;
    double theta = std::numbers::pi / 3, phi = std::numbers::pi / 4;
    std::int64_t mc_samples = 100000;
    std::uint64_t seed = 0;
    bool degrees = false;
    CLI::App* run = app.add_subcommand("run", "Simulate one teleportation configuration");
    add_scenario(run, run_scenario);
    run->add_option("--protocol", run_protocol, "Named protocol or explicit table")->required();
    run->add_option("--nu", nu, "Co-sender basis angle nu (radians)")->required();
    run->add_option("--kappa", kappa, "Co-sender basis angle kappa (radians)")->required();
    run->add_option("--theta", theta, "Information-state polar angle for the branch records");
    run->add_option("--phi", phi, "Information-state azimuthal angle");
    run->add_option("--mc-samples", mc_samples, "Monte Carlo sample count (>= 1000)");
    run->add_option("--seed", seed, "Monte Carlo seed");
    run->add_flag("--degrees", degrees, "Interpret the angle options in degrees");
    add_common(run, run_common);

    // table
    CommonArgs table_common;
    CLI::App* table = app.add_subcommand("table", "Recompute and diff the reference registry");
    add_common(table, table_common);

    // search
    ScenarioArgs search_scenario;
    CommonArgs search_common;
    CLI::App* search = app.add_subcommand("search", "Sweep all 65,536 correction tables");
    add_scenario(search, search_scenario);
    add_common(search, search_common);

    // optimize
    ScenarioArgs opt_scenario;
    CommonArgs opt_common;
    std::string opt_protocol = "GHZ";
    CLI::App* optimize = app.add_subcommand("optimize", "Best (nu, kappa) for a fixed table");
    add_scenario(optimize, opt_scenario);
    optimize->add_option("--protocol", opt_protocol, "Named protocol or explicit table")
        ->required();
    add_common(optimize, opt_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return tpt::cli::kExitUsage;
    }

    try {
        if (run->parsed()) {
            // --degrees converts the angles the user actually typed; the
            // theta/phi defaults are already radians
            const double scale = degrees ? std::numbers::pi / 180.0 : 1.0;
            tpt::cli::RunParams params;
            params.scenario = run_scenario.parse();
            params.table = parse_table_arg(run_protocol);
            params.protocol_label = run_protocol;
            params.nu = nu * scale;
            params.kappa = kappa * scale;
            params.info.theta = run->count("--theta") ? theta * scale : theta;
            params.info.phi = run->count("--phi") ? phi * scale : phi;
            params.mc_samples = mc_samples;
            params.seed = seed;
            return emit(tpt::cli::cmd_run(params), run_common);
        }
        if (table->parsed()) {
            return emit(tpt::cli::cmd_table(), table_common);
        }
        if (search->parsed()) {
            return emit(tpt::cli::cmd_search(search_scenario.parse()), search_common);
        }
        if (optimize->parsed()) {
            return emit(tpt::cli::cmd_optimize(opt_scenario.parse(),
                                               parse_table_arg(opt_protocol), opt_protocol),
                        opt_common);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return tpt::cli::kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return tpt::cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return tpt::cli::kExitValidation;
    }
    return tpt::cli::kExitUsage;
}
