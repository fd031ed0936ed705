#pragma once

#include <string>

#include "ame/partitions.hpp"

namespace ame {

// Measure column selector for plots: logneg, coh_ab, coh_ba, coh_max.
// "coherent" is accepted as an alias for coh_max.
double sweep_row_measure(const SweepRow& row, const std::string& measure);
bool is_known_measure(const std::string& measure);

// Renders the sweep as an SVG line chart that mirrors the layout used
// for partition plots: x = subset position in lexicographic order,
// y = the selected measure, one polyline per (state, params, m) group.
std::string render_sweep_svg(const SweepResult& result, const std::string& measure,
                             const std::string& title);

}  // namespace ame
