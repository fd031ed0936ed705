#pragma once

#include <string>

#include "ame/partitions.hpp"

namespace ame {

// Fixed-width float formatting used by every result file: 12
// significant digits, enough for byte-identical fixtures while
// exceeding all test tolerances.
std::string format_double(double v);

// Dash-joined 1-based indices, e.g. "1-3".
std::string subset_to_string(const std::vector<std::size_t>& subset);

// CSV with header state,channel,p,q,r,m,subset,logneg,coh_ab,coh_ba.
// q and r stay empty unless the channel is the Pauli channel.
std::string sweep_to_csv(const SweepResult& result);

// JSON mirror of the CSV: {"rows": [{...}, ...]}. Unused q/r are null.
std::string sweep_to_json(const SweepResult& result);

void write_text_file(const std::string& path, const std::string& content);

// Parses a sweep config file:
// {
//   "state": "phi5",            // or "state_file": "state.json"
//   "channel": {"type": "dephasing", "p": [0.5, 0.55]},
//   "m": [1, 2]                 // optional, default all m <= n/2
// }
// For the Pauli channel, "q" and "r" are scalars or lists matching the
// length of "p". A top-level "p_grid" may replace channel-level "p".
SweepSpec parse_sweep_config(const std::string& text);
SweepSpec load_sweep_config(const std::string& path);

}  // namespace ame
