#include "ame/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ame/detail/combinations.hpp"
#include "ame/svg_plot.hpp"
#include "ame/sweep_io.hpp"

namespace ame::cli {

namespace {

std::string braced_subset(const std::vector<std::size_t>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += std::to_string(subset[i]);
    }
    return s + "}";
}

PureState resolve_state(const RunConfig& config) {
    if (config.state_file) {
        return load_state_file(*config.state_file);
    }
    if (config.state.empty()) {
        throw ConfigError("no state given; use --state or --state-file");
    }
    if (auto s = named_state(config.state)) {
        return *s;
    }
    throw ConfigError("unknown state name: " + config.state);
}

std::string state_label(const RunConfig& config) {
    if (config.state_file) {
        return config.state.empty() ? std::string("custom") : config.state;
    }
    return config.state;
}

// Output path for --plot: the output file with its extension replaced.
std::string plot_path(const std::string& out_path) {
    const std::size_t slash = out_path.find_last_of('/');
    const std::size_t dot = out_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return out_path + ".svg";
    }
    return out_path.substr(0, dot) + ".svg";
}

void write_sweep_outputs(const SweepResult& result, const RunConfig& config,
                         const std::string& title, std::ostream& out) {
    const std::string content =
        config.format == OutputFormat::csv ? sweep_to_csv(result) : sweep_to_json(result);
    write_text_file(config.output_path, content);
    out << "wrote " << result.rows.size() << " rows to " << config.output_path << "\n";
    if (config.plot) {
        const std::string svg_file = plot_path(config.output_path);
        write_text_file(svg_file, render_sweep_svg(result, config.measure, title));
        out << "wrote plot to " << svg_file << "\n";
    }
}

int diagnostics_exit(const SweepResult& result, std::ostream& err) {
    for (const std::string& d : result.diagnostics) {
        err << "numerical diagnostic: " << d << "\n";
    }
    return result.diagnostics.empty() ? kExitOk : kExitNumerical;
}

}  // namespace

unsigned threads_from_env() {
    const char* raw = std::getenv("AME_LAB_THREADS");
    if (!raw) {
        return 0;
    }
    const long v = std::strtol(raw, nullptr, 10);
    if (v <= 0) {
        return 0;
    }
    return static_cast<unsigned>(std::min<long>(v, 256));
}

SweepSpec sweep_spec_from_config(const RunConfig& config) {
    if (config.config_file) {
        SweepSpec spec = load_sweep_config(*config.config_file);
        default_m_values(spec);
        return spec;
    }

    SweepSpec spec;
    spec.state_name = state_label(config);
    spec.state_file = config.state_file;
    if (!config.state_file && spec.state_name.empty()) {
        throw ConfigError("no state given; use --state, --state-file, or --config");
    }
    if (!config.channel) {
        throw ConfigError("no channel given; use --channel or --config");
    }
    spec.channel = parse_channel_kind(*config.channel);
    if (config.p_values.empty()) {
        throw ConfigError("no parameter grid given; use --p");
    }

    auto broadcast = [&](const std::vector<double>& vals, const char* name) {
        if (vals.empty()) {
            return std::vector<double>(config.p_values.size(), 0.0);
        }
        if (vals.size() == 1) {
            return std::vector<double>(config.p_values.size(), vals[0]);
        }
        if (vals.size() != config.p_values.size()) {
            throw ConfigError(std::string("--") + name + " length must be 1 or match --p");
        }
        return vals;
    };
    if (spec.channel != ChannelKind::pauli &&
        (!config.q_values.empty() || !config.r_values.empty())) {
        throw ConfigError("--q/--r only apply to the pauli channel");
    }
    const std::vector<double> qs = broadcast(config.q_values, "q");
    const std::vector<double> rs = broadcast(config.r_values, "r");
    for (std::size_t i = 0; i < config.p_values.size(); ++i) {
        spec.grid.push_back({config.p_values[i], qs[i], rs[i]});
    }

    spec.m_values = config.m_values;
    default_m_values(spec);
    return spec;
}

int cmd_verify_ame(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const PureState state = resolve_state(config);
    const std::size_t n = state.num_qubits();
    const DensityMatrix rho = density(state);

    out << "state " << state_label(config) << ": n = " << n << " qubits, tol = "
        << config.tol << "\n";
    double worst_deficit = -1.0;
    std::vector<std::size_t> worst_cut;
    for (std::size_t m = 1; m <= n / 2; ++m) {
        for (const auto& subset : detail::subsets(n, m)) {
            const double entropy = von_neumann_entropy(partial_trace(rho, subset));
            const double deficit = static_cast<double>(m) - entropy;
            out << "  m=" << m << "  A=" << std::left << std::setw(14)
                << braced_subset(subset) << std::right << "S = " << format_double(entropy)
                << "  deficit = " << format_double(deficit) << "\n";
            if (deficit > worst_deficit) {
                worst_deficit = deficit;
                worst_cut = subset;
            }
        }
    }
    const bool ame = is_ame(state, config.tol);
    out << "worst-cut deficit = " << format_double(worst_deficit) << " at A="
        << braced_subset(worst_cut) << "\n";
    out << "verdict: " << (ame ? "AME" : "not AME") << "\n";
    (void)err;
    return ame ? kExitOk : kExitVerdictNegative;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const SweepSpec spec = sweep_spec_from_config(config);
    if (config.output_path.empty()) {
        throw ConfigError("sweep needs --out");
    }
    const SweepResult result = run_sweep(spec, config.threads);
    const std::string title =
        spec.state_name + " / " + to_string(spec.channel) + " / " + config.measure;
    write_sweep_outputs(result, config, title, out);
    return diagnostics_exit(result, err);
}

int cmd_symmetry(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const SweepSpec spec = sweep_spec_from_config(config);
    const SweepResult result = run_sweep(spec, config.threads);
    const int diag = diagnostics_exit(result, err);
    if (diag != kExitOk) {
        return diag;
    }

    const SymmetryReport report = symmetry_report(result, config.tol);
    out << "state=" << spec.state_name << " channel=" << to_string(spec.channel)
        << " tol=" << format_double(report.tol) << "\n";
    for (const SymmetryEntry& e : report.entries) {
        out << "  p=" << std::left << std::setw(10) << format_double(e.params.p);
        if (spec.channel == ChannelKind::pauli) {
            out << " q=" << std::setw(10) << format_double(e.params.q) << " r="
                << std::setw(10) << format_double(e.params.r);
        }
        out << " m=" << e.m << "  " << std::setw(8) << e.measure << std::right
            << "  spread = " << std::left << std::setw(16) << format_double(e.spread)
            << std::right << (e.symmetric ? "  symmetric" : "  BROKEN") << "\n";
    }
    const bool symmetric = report.all_symmetric();
    out << "verdict: " << (symmetric ? "symmetric" : "broken") << "\n";
    return symmetric ? kExitOk : kExitVerdictNegative;
}

const std::vector<FigurePreset>& figure_presets() {
    static const std::vector<FigurePreset> presets = {
        {"fig1", {"phi5"}, ChannelKind::depolarizing,
         {0.225, 0.25, 0.275, 0.3, 0.325}, {1, 2}, "logneg"},
        {"fig2", {"phi5"}, ChannelKind::depolarizing,
         {0.025, 0.05, 0.075, 0.1, 0.125}, {1, 2}, "coh_max"},
        {"fig3", {"phi5"}, ChannelKind::dephasing,
         {0.5, 0.55, 0.6, 0.65, 0.7}, {1, 2}, "logneg"},
        {"fig4", {"phi5"}, ChannelKind::dephasing,
         {0.15, 0.2, 0.25, 0.3, 0.35}, {1, 2}, "coh_max"},
        {"fig5", {"phi5_prime"}, ChannelKind::dephasing,
         {0.5, 0.55, 0.6, 0.65, 0.7}, {1, 2}, "logneg"},
        {"fig6", {"phi5_prime"}, ChannelKind::dephasing,
         {0.15, 0.2, 0.25, 0.3, 0.35}, {1, 2}, "coh_max"},
        {"fig7", {"phi5", "phi5_prime"}, ChannelKind::dephasing,
         {0.36}, {1, 2}, "logneg"},
    };
    return presets;
}

int cmd_figure(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto& presets = figure_presets();
    const auto it = std::find_if(presets.begin(), presets.end(),
                                 [&](const FigurePreset& f) { return f.id == config.figure_id; });
    if (it == presets.end()) {
        throw ConfigError("unknown figure preset: " + config.figure_id);
    }

    SweepResult combined;
    for (const std::string& state : it->states) {
        SweepSpec spec;
        spec.state_name = state;
        spec.channel = it->channel;
        for (double p : it->p_grid) {
            spec.grid.push_back({p, 0.0, 0.0});
        }
        spec.m_values = it->m_values;
        SweepResult part = run_sweep(spec, config.threads);
        combined.channel = part.channel;
        combined.rows.insert(combined.rows.end(), part.rows.begin(), part.rows.end());
        combined.diagnostics.insert(combined.diagnostics.end(), part.diagnostics.begin(),
                                    part.diagnostics.end());
    }

    RunConfig output_config = config;
    output_config.measure = it->measure;
    if (output_config.output_path.empty()) {
        output_config.output_path =
            it->id + (config.format == OutputFormat::csv ? ".csv" : ".json");
    }
    const std::string title = it->id + " / " + to_string(it->channel) + " / " + it->measure;
    write_sweep_outputs(combined, output_config, title, out);
    return diagnostics_exit(combined, err);
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::verify_ame:
                return cmd_verify_ame(config, out, err);
            case Command::sweep:
                return cmd_sweep(config, out, err);
            case Command::symmetry:
                return cmd_symmetry(config, out, err);
            case Command::figure:
                return cmd_figure(config, out, err);
        }
        err << "error: unknown command\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParamOutOfRange& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const MOutOfRange& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NotPSD& e) {
        err << "numerical diagnostic: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace ame::cli
