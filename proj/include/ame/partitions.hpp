#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ame/channels.hpp"
#include "ame/measures.hpp"
#include "ame/states.hpp"

namespace ame {

// One point of the channel parameter grid. q and r are only meaningful
// for the Pauli channel and stay zero otherwise.
struct ParamPoint {
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;
};

// A (state x channel x grid x cut-sizes) sweep description.
struct SweepSpec {
    std::string state_name;                 // catalog name, or a label for file states
    std::optional<std::string> state_file;  // set for custom states
    ChannelKind channel = ChannelKind::depolarizing;
    std::vector<ParamPoint> grid;
    std::vector<std::size_t> m_values;      // each in [1, floor(n/2)]
};

struct SweepRow {
    std::string state;
    std::string channel;
    ParamPoint params;
    std::size_t m = 0;
    std::vector<std::size_t> subset_a;
    double log_negativity = 0.0;
    double coherent_info_a_to_b = 0.0;
    double coherent_info_b_to_a = 0.0;
};

struct SweepResult {
    ChannelKind channel = ChannelKind::depolarizing;
    std::vector<SweepRow> rows;
    // NotPSD diagnostics; a nonempty list means some rows carry NaNs.
    std::vector<std::string> diagnostics;
};

struct SymmetryEntry {
    ParamPoint params;
    std::size_t m = 0;
    std::string measure;  // logneg, coh_ab, coh_ba, coh_max
    double spread = 0.0;  // max - min across subsets
    bool symmetric = false;
};

struct SymmetryReport {
    double tol = 0.0;
    std::vector<SymmetryEntry> entries;
    bool all_symmetric() const;
};

struct MonotonicityEntry {
    std::size_t m = 0;
    std::vector<std::size_t> subset_a;
    std::string measure;
    bool non_increasing = false;
};

struct MonotonicityReport {
    std::vector<MonotonicityEntry> entries;
    bool all_non_increasing() const;
};

// All C(n, m) subsets of {1..n} in lexicographic order; requires
// 1 <= m <= floor(n/2).
std::vector<std::vector<std::size_t>> enumerate_subsets(std::size_t n, std::size_t m);

// Resolves the spec's state (catalog name or file).
PureState resolve_sweep_state(const SweepSpec& spec);

// Fills m_values with 1..floor(n/2) when the spec leaves it empty.
void default_m_values(SweepSpec& spec);

// Runs the full sweep: one noisy state per grid point, then every cut
// of every requested size on that same state. Rows come out sorted by
// (grid point, m, subset) regardless of the thread count. threads = 0
// picks the hardware concurrency; the CLI caps it via AME_LAB_THREADS.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

// Per-(params, m, measure) spread across subsets.
SymmetryReport symmetry_report(const SweepResult& result, double tol = 1e-9);

// Per-(subset, measure) check that values never increase along the
// grid (requires the grid sorted ascending in p; 1e-9 plateau slack).
MonotonicityReport monotonicity_check(const SweepResult& result);

}  // namespace ame
