#include "ame/partitions.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <thread>
#include <tuple>

#include "ame/detail/combinations.hpp"

namespace ame {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct WorkItem {
    std::size_t point_index;
    std::size_t m;
    std::vector<std::size_t> subset;
};

std::string subset_label(const std::vector<std::size_t>& subset) {
    std::string s;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += std::to_string(subset[i]);
    }
    return "{" + s + "}";
}

unsigned resolve_threads(unsigned requested, std::size_t work) {
    unsigned t = requested;
    if (t == 0) {
        t = std::thread::hardware_concurrency();
        if (t == 0) {
            t = 1;
        }
    }
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

}  // namespace

bool SymmetryReport::all_symmetric() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const SymmetryEntry& e) { return e.symmetric; });
}

bool MonotonicityReport::all_non_increasing() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const MonotonicityEntry& e) { return e.non_increasing; });
}

std::vector<std::vector<std::size_t>> enumerate_subsets(std::size_t n, std::size_t m) {
    if (m < 1 || m > n / 2) {
        throw MOutOfRange("subset size must lie in [1, floor(n/2)]");
    }
    return detail::subsets(n, m);
}

PureState resolve_sweep_state(const SweepSpec& spec) {
    if (spec.state_file) {
        return load_state_file(*spec.state_file);
    }
    if (auto s = named_state(spec.state_name)) {
        return *s;
    }
    throw ConfigError("unknown state name: " + spec.state_name);
}

void default_m_values(SweepSpec& spec) {
    if (!spec.m_values.empty()) {
        return;
    }
    const std::size_t n = resolve_sweep_state(spec).num_qubits();
    for (std::size_t m = 1; m <= n / 2; ++m) {
        spec.m_values.push_back(m);
    }
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
    const PureState state = resolve_sweep_state(spec);
    const std::size_t n = state.num_qubits();

    if (spec.grid.empty()) {
        throw ConfigError("sweep needs at least one parameter point");
    }
    if (spec.m_values.empty()) {
        throw ConfigError("sweep needs at least one subset size");
    }
    // Validate every grid point and subset size up front; a bad sweep
    // grid should fail before any work is done.
    for (const ParamPoint& pt : spec.grid) {
        make_channel(spec.channel, pt.p, pt.q, pt.r);
    }
    std::vector<std::vector<std::vector<std::size_t>>> subsets_per_m;
    for (std::size_t m : spec.m_values) {
        subsets_per_m.push_back(enumerate_subsets(n, m));
    }

    SweepResult result;
    result.channel = spec.channel;

    // One noisy state per grid point, shared across every cut, along
    // with its full-state entropy.
    const DensityMatrix rho0 = density(state);
    std::vector<DensityMatrix> noisy;
    std::vector<double> entropy_ab;
    std::vector<std::string> diagnostics;
    noisy.reserve(spec.grid.size());
    for (const ParamPoint& pt : spec.grid) {
        const SingleQubitChannel ch = make_channel(spec.channel, pt.p, pt.q, pt.r);
        noisy.push_back(apply_symmetric(rho0, ch));
        try {
            entropy_ab.push_back(von_neumann_entropy(noisy.back()));
        } catch (const NotPSD& e) {
            entropy_ab.push_back(kNan);
            diagnostics.push_back("point p=" + std::to_string(pt.p) + ": " + e.what());
        }
    }

    std::vector<WorkItem> items;
    for (std::size_t pi = 0; pi < spec.grid.size(); ++pi) {
        for (std::size_t mi = 0; mi < spec.m_values.size(); ++mi) {
            for (const auto& subset : subsets_per_m[mi]) {
                items.push_back({pi, spec.m_values[mi], subset});
            }
        }
    }

    result.rows.resize(items.size());
    std::vector<std::vector<std::string>> worker_diagnostics;

    const unsigned num_threads = resolve_threads(threads, items.size());
    worker_diagnostics.resize(num_threads);
    std::atomic<std::size_t> next{0};

    auto worker = [&](unsigned worker_id) {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= items.size()) {
                return;
            }
            const WorkItem& item = items[idx];
            const ParamPoint& pt = spec.grid[item.point_index];
            SweepRow& row = result.rows[idx];
            row.state = spec.state_name;
            row.channel = to_string(spec.channel);
            row.params = pt;
            row.m = item.m;
            row.subset_a = item.subset;
            try {
                const Bipartition part(n, item.subset);
                const MeasureRecord rec = evaluate_measures(
                    noisy[item.point_index], part, entropy_ab[item.point_index]);
                row.log_negativity = rec.log_negativity;
                row.coherent_info_a_to_b = rec.coherent_info_a_to_b;
                row.coherent_info_b_to_a = rec.coherent_info_b_to_a;
            } catch (const NotPSD& e) {
                row.log_negativity = kNan;
                row.coherent_info_a_to_b = kNan;
                row.coherent_info_b_to_a = kNan;
                worker_diagnostics[worker_id].push_back(
                    "p=" + std::to_string(pt.p) + " A=" + subset_label(item.subset) + ": " +
                    e.what());
            }
        }
    };

    if (num_threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(num_threads);
        for (unsigned t = 0; t < num_threads; ++t) {
            pool.emplace_back(worker, t);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    result.diagnostics = std::move(diagnostics);
    for (const auto& list : worker_diagnostics) {
        result.diagnostics.insert(result.diagnostics.end(), list.begin(), list.end());
    }
    // NaN entropy of the full state poisons coherent informations even
    // when no per-row exception fired.
    if (std::any_of(entropy_ab.begin(), entropy_ab.end(),
                    [](double s) { return std::isnan(s); })) {
        for (SweepRow& row : result.rows) {
            row.coherent_info_a_to_b = kNan;
            row.coherent_info_b_to_a = kNan;
        }
    }
    return result;
}

SymmetryReport symmetry_report(const SweepResult& result, double tol) {
    struct Extrema {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        void feed(double v) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        double spread() const { return hi - lo; }
    };
    struct GroupStats {
        Extrema logneg, coh_ab, coh_ba, coh_max;
    };

    // Rows are produced sorted by (point, m, subset); the map keeps the
    // report in the same order.
    std::map<std::tuple<std::size_t, std::size_t>, GroupStats> groups;
    std::map<std::tuple<std::size_t, std::size_t>, ParamPoint> group_params;

    // Identify grid points by first occurrence, robust against equal
    // parameter values at different points.
    std::vector<const SweepRow*> order;
    std::size_t point_counter = 0;
    double last_p = kNan, last_q = kNan, last_r = kNan;
    for (const SweepRow& row : result.rows) {
        if (row.params.p != last_p || row.params.q != last_q || row.params.r != last_r) {
            ++point_counter;
            last_p = row.params.p;
            last_q = row.params.q;
            last_r = row.params.r;
        }
        const auto key = std::make_tuple(point_counter, row.m);
        GroupStats& g = groups[key];
        group_params[key] = row.params;
        g.logneg.feed(row.log_negativity);
        g.coh_ab.feed(row.coherent_info_a_to_b);
        g.coh_ba.feed(row.coherent_info_b_to_a);
        g.coh_max.feed(std::max(row.coherent_info_a_to_b, row.coherent_info_b_to_a));
    }

    SymmetryReport report;
    report.tol = tol;
    for (const auto& [key, stats] : groups) {
        const auto add = [&](const char* name, const Extrema& e) {
            SymmetryEntry entry;
            entry.params = group_params[key];
            entry.m = std::get<1>(key);
            entry.measure = name;
            entry.spread = e.spread();
            entry.symmetric = entry.spread <= tol;
            report.entries.push_back(std::move(entry));
        };
        add("logneg", stats.logneg);
        add("coh_ab", stats.coh_ab);
        add("coh_ba", stats.coh_ba);
        add("coh_max", stats.coh_max);
    }
    return report;
}

MonotonicityReport monotonicity_check(const SweepResult& result) {
    // Collect the value sequence per (m, subset, measure) in row order;
    // rows are grouped by grid point, so each sequence follows the grid.
    std::map<std::pair<std::size_t, std::vector<std::size_t>>,
             std::array<std::vector<double>, 3>>
        sequences;
    for (const SweepRow& row : result.rows) {
        auto& seqs = sequences[{row.m, row.subset_a}];
        seqs[0].push_back(row.log_negativity);
        seqs[1].push_back(row.coherent_info_a_to_b);
        seqs[2].push_back(row.coherent_info_b_to_a);
    }

    static const char* kMeasureNames[3] = {"logneg", "coh_ab", "coh_ba"};
    MonotonicityReport report;
    for (const auto& [key, seqs] : sequences) {
        for (std::size_t mi = 0; mi < 3; ++mi) {
            MonotonicityEntry entry;
            entry.m = key.first;
            entry.subset_a = key.second;
            entry.measure = kMeasureNames[mi];
            entry.non_increasing = true;
            for (std::size_t i = 1; i < seqs[mi].size(); ++i) {
                if (!(seqs[mi][i] <= seqs[mi][i - 1] + 1e-9)) {
                    entry.non_increasing = false;
                    break;
                }
            }
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

}  // namespace ame
