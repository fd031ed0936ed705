// Batch CLI for AME-state noise sweeps: AME verification, partition
// sweeps, symmetry reports, and bundled figure presets.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ame/cli.hpp"
#include "ame/svg_plot.hpp"

namespace {

using ame::cli::RunConfig;

void add_state_flags(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--state", config.state, "catalog state: bell, ghz3, phi5, phi5_prime, phi6");
    cmd->add_option("--state-file", [&config](const std::vector<std::string>& v) {
        config.state_file = v.back();
        return true;
    }, "JSON state file {num_qubits, amplitudes}");
}

void add_sweep_flags(CLI::App* cmd, RunConfig& config) {
    add_state_flags(cmd, config);
    cmd->add_option("--channel", [&config](const std::vector<std::string>& v) {
        config.channel = v.back();
        return true;
    }, "channel type: depolarizing, dephasing, pauli");
    cmd->add_option("--p", config.p_values, "parameter grid (comma separated)")
        ->delimiter(',');
    cmd->add_option("--q", config.q_values, "pauli q values (scalar or per-p list)")
        ->delimiter(',');
    cmd->add_option("--r", config.r_values, "pauli r values (scalar or per-p list)")
        ->delimiter(',');
    cmd->add_option("--m", config.m_values, "subset sizes, default all m <= n/2")
        ->delimiter(',');
    cmd->add_option("--config", [&config](const std::vector<std::string>& v) {
        config.config_file = v.back();
        return true;
    }, "JSON sweep config (alternative to the flags above)");
}

void add_output_flags(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--out", config.output_path, "output file path");
    cmd->add_option("--format", [&config](const std::vector<std::string>& v) {
        if (v.back() == "csv") {
            config.format = ame::cli::OutputFormat::csv;
        } else if (v.back() == "json") {
            config.format = ame::cli::OutputFormat::json;
        } else {
            return false;
        }
        return true;
    }, "output format: csv (default) or json");
    cmd->add_flag("--plot", config.plot, "also write an SVG chart next to the output");
    cmd->add_option("--measure", config.measure,
                    "plotted measure: logneg, coh_ab, coh_ba, coh_max");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ame_lab: AME states under local symmetric noise"};
    app.require_subcommand(1);

    RunConfig config;
    config.threads = ame::cli::threads_from_env();

    CLI::App* verify = app.add_subcommand("verify-ame", "check the AME property cut by cut");
    add_state_flags(verify, config);
    verify->add_option("--tol", config.tol, "entropy deficit tolerance (bits)");
    verify->callback([&] { config.command = ame::cli::Command::verify_ame; });

    CLI::App* sweep = app.add_subcommand("sweep", "run a (state x channel x grid x cut) sweep");
    add_sweep_flags(sweep, config);
    add_output_flags(sweep, config);
    sweep->callback([&] { config.command = ame::cli::Command::sweep; });

    CLI::App* symmetry =
        app.add_subcommand("symmetry", "report per-cut spreads and the symmetry verdict");
    add_sweep_flags(symmetry, config);
    symmetry->add_option("--tol", config.tol, "spread tolerance (bits)");
    symmetry->callback([&] { config.command = ame::cli::Command::symmetry; });

    CLI::App* figure = app.add_subcommand("figure", "run a bundled preset (fig1..fig7)");
    figure->add_option("preset", config.figure_id, "preset id: fig1..fig7")->required();
    add_output_flags(figure, config);
    figure->callback([&] { config.command = ame::cli::Command::figure; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is a usage error.
        return code == 0 ? 0 : ame::cli::kExitConfig;
    }

    if (!ame::is_known_measure(config.measure)) {
        std::cerr << "config error: unknown measure: " << config.measure << "\n";
        return ame::cli::kExitConfig;
    }

    return ame::cli::run_command(config, std::cout, std::cerr);
}
