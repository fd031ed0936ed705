#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ame/partitions.hpp"

namespace ame::cli {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictNegative = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

enum class Command { verify_ame, sweep, symmetry, figure };
enum class OutputFormat { csv, json };

struct RunConfig {
    Command command = Command::sweep;

    // State selection: catalog name or file (file wins when both set).
    std::string state;
    std::optional<std::string> state_file;

    // Channel/grid flags for sweep and symmetry.
    std::optional<std::string> channel;
    std::vector<double> p_values;
    std::vector<double> q_values;
    std::vector<double> r_values;
    std::vector<std::size_t> m_values;

    // Alternative to the flags above: a sweep config file.
    std::optional<std::string> config_file;

    std::string figure_id;  // fig1..fig7

    std::string output_path;
    OutputFormat format = OutputFormat::csv;
    bool plot = false;
    std::string measure = "logneg";
    double tol = 1e-9;

    // Worker cap; 0 = hardware concurrency. main() seeds this from
    // AME_LAB_THREADS.
    unsigned threads = 0;
};

// Reads AME_LAB_THREADS; returns 0 when unset or unparsable.
unsigned threads_from_env();

// Builds the SweepSpec from flags or the config file. Throws
// ConfigError on contradictions or missing pieces.
SweepSpec sweep_spec_from_config(const RunConfig& config);

int cmd_verify_ame(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_symmetry(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_figure(const RunConfig& config, std::ostream& out, std::ostream& err);

// Dispatches on config.command.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

// Figure presets: the state/channel/grid/measure combinations bundled
// as fig1..fig7.
struct FigurePreset {
    std::string id;
    std::vector<std::string> states;
    ChannelKind channel = ChannelKind::depolarizing;
    std::vector<double> p_grid;
    std::vector<std::size_t> m_values;
    std::string measure;
};

const std::vector<FigurePreset>& figure_presets();

}  // namespace ame::cli
