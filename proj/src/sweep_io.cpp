#include "ame/sweep_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ame {

namespace {

std::vector<double> number_or_list(const nlohmann::json& j, const std::string& key) {
    const auto& v = j.at(key);
    std::vector<double> out;
    if (v.is_number()) {
        out.push_back(v.get<double>());
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (!e.is_number()) {
                throw ConfigError("config field '" + key + "' must hold numbers");
            }
            out.push_back(e.get<double>());
        }
    } else {
        throw ConfigError("config field '" + key + "' must be a number or list");
    }
    if (out.empty()) {
        throw ConfigError("config field '" + key + "' must be nonempty");
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string subset_to_string(const std::vector<std::size_t>& subset) {
    std::string s;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) {
            s += "-";
        }
        s += std::to_string(subset[i]);
    }
    return s;
}

std::string sweep_to_csv(const SweepResult& result) {
    const bool pauli = result.channel == ChannelKind::pauli;
    std::string out = "state,channel,p,q,r,m,subset,logneg,coh_ab,coh_ba\n";
    for (const SweepRow& row : result.rows) {
        out += row.state;
        out += ',';
        out += row.channel;
        out += ',';
        out += format_double(row.params.p);
        out += ',';
        if (pauli) {
            out += format_double(row.params.q);
        }
        out += ',';
        if (pauli) {
            out += format_double(row.params.r);
        }
        out += ',';
        out += std::to_string(row.m);
        out += ',';
        out += subset_to_string(row.subset_a);
        out += ',';
        out += format_double(row.log_negativity);
        out += ',';
        out += format_double(row.coherent_info_a_to_b);
        out += ',';
        out += format_double(row.coherent_info_b_to_a);
        out += '\n';
    }
    return out;
}

std::string sweep_to_json(const SweepResult& result) {
    // Assembled by hand so the numeric fields carry exactly the same
    // 12-significant-digit text as the CSV.
    const bool pauli = result.channel == ChannelKind::pauli;
    std::string out = "{\"rows\": [";
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const SweepRow& row = result.rows[i];
        if (i) {
            out += ", ";
        }
        out += "{\"state\": \"" + row.state + "\", \"channel\": \"" + row.channel + "\"";
        out += ", \"p\": " + format_double(row.params.p);
        out += ", \"q\": ";
        out += pauli ? format_double(row.params.q) : "null";
        out += ", \"r\": ";
        out += pauli ? format_double(row.params.r) : "null";
        out += ", \"m\": " + std::to_string(row.m);
        out += ", \"subset\": [";
        for (std::size_t k = 0; k < row.subset_a.size(); ++k) {
            if (k) {
                out += ", ";
            }
            out += std::to_string(row.subset_a[k]);
        }
        out += "]";
        out += ", \"logneg\": " + format_double(row.log_negativity);
        out += ", \"coh_ab\": " + format_double(row.coherent_info_a_to_b);
        out += ", \"coh_ba\": " + format_double(row.coherent_info_b_to_a);
        out += "}";
    }
    out += "]}\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open output file: " + path);
    }
    out << content;
    if (!out) {
        throw ConfigError("failed writing output file: " + path);
    }
}

SweepSpec parse_sweep_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }

    SweepSpec spec;
    if (j.contains("state_file")) {
        spec.state_file = j["state_file"].get<std::string>();
        spec.state_name = j.value("state", "custom");
    } else if (j.contains("state")) {
        spec.state_name = j["state"].get<std::string>();
        if (!named_state(spec.state_name)) {
            throw ConfigError("unknown state name: " + spec.state_name);
        }
    } else {
        throw ConfigError("config needs 'state' or 'state_file'");
    }

    if (!j.contains("channel") || !j["channel"].is_object() ||
        !j["channel"].contains("type")) {
        throw ConfigError("config needs channel.type");
    }
    const auto& ch = j["channel"];
    spec.channel = parse_channel_kind(ch["type"].get<std::string>());

    std::vector<double> ps;
    if (j.contains("p_grid")) {
        ps = number_or_list(j, "p_grid");
    } else if (ch.contains("p")) {
        ps = number_or_list(ch, "p");
    } else {
        throw ConfigError("config needs channel.p or p_grid");
    }

    std::vector<double> qs(ps.size(), 0.0), rs(ps.size(), 0.0);
    if (spec.channel == ChannelKind::pauli) {
        auto broadcast = [&](const char* key) -> std::vector<double> {
            if (!ch.contains(key)) {
                return std::vector<double>(ps.size(), 0.0);
            }
            std::vector<double> vals = number_or_list(ch, key);
            if (vals.size() == 1) {
                return std::vector<double>(ps.size(), vals[0]);
            }
            if (vals.size() != ps.size()) {
                throw ConfigError(std::string("channel.") + key +
                                  " length must be 1 or match p");
            }
            return vals;
        };
        qs = broadcast("q");
        rs = broadcast("r");
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        spec.grid.push_back({ps[i], qs[i], rs[i]});
    }

    if (j.contains("m")) {
        const auto& mv = j["m"];
        if (mv.is_number_unsigned()) {
            spec.m_values.push_back(mv.get<std::size_t>());
        } else if (mv.is_array()) {
            for (const auto& e : mv) {
                if (!e.is_number_unsigned()) {
                    throw ConfigError("config field 'm' must hold positive integers");
                }
                spec.m_values.push_back(e.get<std::size_t>());
            }
        } else {
            throw ConfigError("config field 'm' must be an integer or list");
        }
    }
    return spec;
}

SweepSpec load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sweep_config(buf.str());
}

}  // namespace ame
