#include "ame/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <tuple>

#include "ame/sweep_io.hpp"

namespace ame {

namespace {

const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (subset position, value)
};

}  // namespace

double sweep_row_measure(const SweepRow& row, const std::string& measure) {
    if (measure == "logneg") {
        return row.log_negativity;
    }
    if (measure == "coh_ab") {
        return row.coherent_info_a_to_b;
    }
    if (measure == "coh_ba") {
        return row.coherent_info_b_to_a;
    }
    if (measure == "coh_max" || measure == "coherent") {
        return std::max(row.coherent_info_a_to_b, row.coherent_info_b_to_a);
    }
    throw ConfigError("unknown measure: " + measure);
}

bool is_known_measure(const std::string& measure) {
    return measure == "logneg" || measure == "coh_ab" || measure == "coh_ba" ||
           measure == "coh_max" || measure == "coherent";
}

std::string render_sweep_svg(const SweepResult& result, const std::string& measure,
                             const std::string& title) {
    // Group rows by (state, params, m), preserving first appearance.
    std::vector<Series> series;
    std::map<std::tuple<std::string, double, double, double, std::size_t>, std::size_t> index;
    std::map<std::size_t, std::size_t> position_counter;
    for (const SweepRow& row : result.rows) {
        const auto key = std::make_tuple(row.state, row.params.p, row.params.q,
                                         row.params.r, row.m);
        auto it = index.find(key);
        if (it == index.end()) {
            Series s;
            s.label = row.state + " m=" + std::to_string(row.m) +
                      " p=" + format_double(row.params.p);
            if (result.channel == ChannelKind::pauli) {
                s.label += " q=" + format_double(row.params.q) +
                           " r=" + format_double(row.params.r);
            }
            it = index.emplace(key, series.size()).first;
            series.push_back(std::move(s));
        }
        Series& s = series[it->second];
        s.points.emplace_back(static_cast<double>(s.points.size() + 1),
                              sweep_row_measure(row, measure));
    }

    double x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool have_data = false;
    for (const Series& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(y)) {
                continue;
            }
            if (!have_data) {
                y_min = y_max = y;
                have_data = true;
            }
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    double pad = 0.05 * (y_max - y_min);
    if (pad == 0.0) {
        pad = 0.5;
    }
    y_min -= pad;
    y_max += pad;

    const double width = 820, height = 480;
    const double left = 70, right = 200, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const auto x_of = [&](double x) {
        return x_max > 1.0 ? left + (x - 1.0) / (x_max - 1.0) * plot_w : left + plot_w / 2.0;
    };
    const auto y_of = [&](double y) { return top + (y_max - y) / (y_max - y_min) * plot_h; };

    std::string svg;
    svg += "<svg xmlns='http://www.w3.org/2000/svg' width='" + px(width) + "' height='" +
           px(height) + "' viewBox='0 0 " + px(width) + " " + px(height) + "'>\n";
    svg += "<rect width='" + px(width) + "' height='" + px(height) + "' fill='white'/>\n";
    svg += "<text x='" + px(left) + "' y='24' font-family='sans-serif' font-size='15'>" +
           title + "</text>\n";

    // Axes.
    svg += "<line x1='" + px(left) + "' y1='" + px(top) + "' x2='" + px(left) + "' y2='" +
           px(top + plot_h) + "' stroke='black'/>\n";
    svg += "<line x1='" + px(left) + "' y1='" + px(top + plot_h) + "' x2='" +
           px(left + plot_w) + "' y2='" + px(top + plot_h) + "' stroke='black'/>\n";

    // x ticks at integer subset positions.
    const int x_ticks = static_cast<int>(x_max);
    const int x_step = std::max(1, x_ticks / 20);
    for (int t = 1; t <= x_ticks; t += x_step) {
        const double xx = x_of(t);
        svg += "<line x1='" + px(xx) + "' y1='" + px(top + plot_h) + "' x2='" + px(xx) +
               "' y2='" + px(top + plot_h + 4) + "' stroke='black'/>\n";
        svg += "<text x='" + px(xx) + "' y='" + px(top + plot_h + 18) +
               "' font-family='sans-serif' font-size='11' text-anchor='middle'>" +
               std::to_string(t) + "</text>\n";
    }
    svg += "<text x='" + px(left + plot_w / 2) + "' y='" + px(height - 12) +
           "' font-family='sans-serif' font-size='12' text-anchor='middle'>subset "
           "(lexicographic position)</text>\n";

    // y ticks.
    for (int t = 0; t <= 5; ++t) {
        const double yv = y_min + (y_max - y_min) * t / 5.0;
        const double yy = y_of(yv);
        svg += "<line x1='" + px(left - 4) + "' y1='" + px(yy) + "' x2='" + px(left) +
               "' y2='" + px(yy) + "' stroke='black'/>\n";
        svg += "<text x='" + px(left - 8) + "' y='" + px(yy + 4) +
               "' font-family='sans-serif' font-size='11' text-anchor='end'>" +
               tick_label(yv) + "</text>\n";
    }
    svg += "<text x='16' y='" + px(top + plot_h / 2) +
           "' font-family='sans-serif' font-size='12' text-anchor='middle' transform='rotate(-90 "
           "16 " + px(top + plot_h / 2) + ")'>" + measure + " (bits)</text>\n";

    // Series polylines with point markers and a legend on the right.
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        std::string points;
        for (const auto& [x, y] : series[i].points) {
            if (!std::isfinite(y)) {
                continue;
            }
            points += px(x_of(x)) + "," + px(y_of(y)) + " ";
        }
        svg += "<polyline fill='none' stroke='";
        svg += color;
        svg += "' stroke-width='1.5' points='" + points + "'/>\n";
        for (const auto& [x, y] : series[i].points) {
            if (!std::isfinite(y)) {
                continue;
            }
            svg += "<circle cx='" + px(x_of(x)) + "' cy='" + px(y_of(y)) +
                   "' r='2.5' fill='";
            svg += color;
            svg += "'/>\n";
        }
        const double ly = top + 14.0 * static_cast<double>(i);
        svg += "<line x1='" + px(left + plot_w + 14) + "' y1='" + px(ly) + "' x2='" +
               px(left + plot_w + 34) + "' y2='" + px(ly) + "' stroke='";
        svg += color;
        svg += "' stroke-width='2'/>\n";
        svg += "<text x='" + px(left + plot_w + 40) + "' y='" + px(ly + 4) +
               "' font-family='sans-serif' font-size='10'>" + series[i].label + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace ame
