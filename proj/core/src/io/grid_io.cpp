/*
   Copyright 2026 The falseclaim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "falseclaim/io/grid_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "falseclaim/io/csv.hpp"

namespace falseclaim::io {

namespace {

const std::vector<std::string> kGridHeader = {"task", "delta_seed", "n", "delta_obs", "prob"};
const std::vector<std::string> kContourHeader = {"n", "delta_at_threshold"};

[[noreturn]] void bad_line(std::string_view what, std::size_t line, std::string_view why) {
    throw UsageError(std::string(what) + " line " + std::to_string(line) + ": " +
                     std::string(why));
}

std::string optional_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

// Cell edges along an axis, midway between neighbouring centres.
std::vector<double> cell_edges(const std::vector<double>& centres, double lone_half_width) {
    const std::size_t k = centres.size();
    std::vector<double> edges(k + 1);
    if (k == 1) {
        edges[0] = centres[0] - lone_half_width;
        edges[1] = centres[0] + lone_half_width;
        return edges;
    }
    for (std::size_t i = 1; i < k; ++i) edges[i] = 0.5 * (centres[i - 1] + centres[i]);
    edges[0] = centres[0] - (edges[1] - centres[0]);
    edges[k] = centres[k - 1] + (centres[k - 1] - edges[k - 1]);
    return edges;
}

std::string coord(double v) { return format_fixed(v, 2); }

struct Frame {
    double left = 80.0;
    double right = 600.0;
    double top = 50.0;
    double bottom = 450.0;
    double x_lo = 0.0, x_hi = 1.0;  // log10(n)
    double y_lo = 0.0, y_hi = 1.0;  // delta

    double x(double log_n) const { return left + (log_n - x_lo) / (x_hi - x_lo) * (right - left); }
    double y(double delta) const {
        return bottom - (delta - y_lo) / (y_hi - y_lo) * (bottom - top);
    }
};

void draw_contour(std::ostringstream& svg, const Frame& frame, const grid::GridResult& g,
                  std::string_view style) {
    std::vector<std::string> points;
    auto flush = [&] {
        if (points.size() >= 2) {
            svg << "<polyline fill=\"none\" " << style << " points=\"";
            for (std::size_t i = 0; i < points.size(); ++i) svg << (i ? " " : "") << points[i];
            svg << "\"/>\n";
        }
        points.clear();
    };
    for (std::size_t c = 0; c < g.n_values.size(); ++c) {
        if (!g.contour[c]) {
            flush();
            continue;
        }
        points.push_back(coord(frame.x(std::log10(static_cast<double>(g.n_values[c])))) + "," +
                         coord(frame.y(*g.contour[c])));
    }
    flush();
}

}  // namespace

std::vector<GridCsvRecord> grid_records(const grid::GridResult& result) {
    std::vector<GridCsvRecord> out;
    const std::string task(task_name(result.task));
    for (std::size_t r = 0; r < result.delta_values.size(); ++r) {
        for (std::size_t c = 0; c < result.n_values.size(); ++c) {
            const auto& cell = result.cells[r][c];
            out.push_back({task, result.seed_delta, result.n_values[c], result.delta_values[r],
                           cell.valid ? std::optional<double>(cell.prob) : std::nullopt});
        }
    }
    return out;
}

std::vector<ContourCsvRecord> contour_records(const grid::GridResult& result) {
    std::vector<ContourCsvRecord> out;
    for (std::size_t c = 0; c < result.n_values.size(); ++c) {
        out.push_back({result.n_values[c], result.contour[c]});
    }
    return out;
}

void write_grid_csv(std::ostream& out, const std::vector<GridCsvRecord>& records) {
    out << join_fields(kGridHeader) << '\n';
    for (const auto& r : records) {
        out << r.task << ',' << format_double(r.delta_seed) << ',' << r.n << ','
            << format_double(r.delta_obs) << ',' << optional_field(r.prob) << '\n';
    }
}

void write_contour_csv(std::ostream& out, const std::vector<ContourCsvRecord>& records) {
    out << join_fields(kContourHeader) << '\n';
    for (const auto& r : records) {
        out << r.n << ',' << optional_field(r.delta_at_threshold) << '\n';
    }
}

std::vector<GridCsvRecord> read_grid_csv(std::istream& in) {
    const auto table = read_csv(in);
    require_header(table.header, kGridHeader, "grid CSV");
    std::vector<GridCsvRecord> out;
    for (const auto& row : table.rows) {
        if (row.fields.size() != kGridHeader.size()) bad_line("grid CSV", row.line, "wrong field count");
        GridCsvRecord rec;
        rec.task = row.fields[0];
        const auto seed = parse_double(row.fields[1]);
        const auto n = parse_int(row.fields[2]);
        const auto delta = parse_double(row.fields[3]);
        if (!seed || !n || !delta) bad_line("grid CSV", row.line, "unparsable number");
        rec.delta_seed = *seed;
        rec.n = *n;
        rec.delta_obs = *delta;
        if (!row.fields[4].empty()) {
            rec.prob = parse_double(row.fields[4]);
            if (!rec.prob) bad_line("grid CSV", row.line, "unparsable probability");
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<ContourCsvRecord> read_contour_csv(std::istream& in) {
    const auto table = read_csv(in);
    require_header(table.header, kContourHeader, "contour CSV");
    std::vector<ContourCsvRecord> out;
    for (const auto& row : table.rows) {
        if (row.fields.size() != kContourHeader.size()) {
            bad_line("contour CSV", row.line, "wrong field count");
        }
        const auto n = parse_int(row.fields[0]);
        if (!n) bad_line("contour CSV", row.line, "unparsable n");
        ContourCsvRecord rec{*n, std::nullopt};
        if (!row.fields[1].empty()) {
            rec.delta_at_threshold = parse_double(row.fields[1]);
            if (!rec.delta_at_threshold) bad_line("contour CSV", row.line, "unparsable delta");
        }
        out.push_back(rec);
    }
    return out;
}

std::string heatmap_color(double prob) {
    const double t = std::clamp(prob / kHeatmapMaxProb, 0.0, 1.0) *
                     static_cast<double>(kHeatmapRamp.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(t));
    const std::size_t hi = std::min(lo + 1, kHeatmapRamp.size() - 1);
    const double frac = t - static_cast<double>(lo);
    auto channel = [](std::string_view hex, int i) {
        return std::stoi(std::string(hex.substr(1 + 2 * i, 2)), nullptr, 16);
    };
    char buf[8];
    int rgb[3];
    for (int i = 0; i < 3; ++i) {
        const double a = channel(kHeatmapRamp[lo], i);
        const double b = channel(kHeatmapRamp[hi], i);
        rgb[i] = static_cast<int>(std::lround(a + frac * (b - a)));
    }
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
    return buf;
}

std::string render_heatmap_svg(const grid::GridResult& result,
                               const grid::GridResult* comparison, std::string_view title) {
    std::vector<double> log_n;
    for (auto n : result.n_values) log_n.push_back(std::log10(static_cast<double>(n)));
    const auto x_edges = cell_edges(log_n, 0.5);
    const auto y_edges = cell_edges(result.delta_values, 0.005);

    Frame frame;
    frame.x_lo = x_edges.front();
    frame.x_hi = x_edges.back();
    frame.y_lo = y_edges.front();
    frame.y_hi = y_edges.back();

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"520\" "
           "viewBox=\"0 0 720 520\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"720\" height=\"520\" fill=\"white\"/>\n";
    svg << "<text x=\"340\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">" << title
        << "</text>\n";

    svg << "<g shape-rendering=\"crispEdges\">\n";
    for (std::size_t r = 0; r < result.delta_values.size(); ++r) {
        for (std::size_t c = 0; c < result.n_values.size(); ++c) {
            const auto& cell = result.cells[r][c];
            const double x0 = frame.x(x_edges[c]);
            const double x1 = frame.x(x_edges[c + 1]);
            const double y0 = frame.y(y_edges[r + 1]);
            const double y1 = frame.y(y_edges[r]);
            svg << "<rect x=\"" << coord(x0) << "\" y=\"" << coord(y0) << "\" width=\""
                << coord(x1 - x0) << "\" height=\"" << coord(y1 - y0) << "\" fill=\""
                << (cell.valid ? heatmap_color(cell.prob) : std::string("#cccccc")) << "\"/>\n";
        }
    }
    svg << "</g>\n";

    draw_contour(svg, frame, result, "stroke=\"black\" stroke-width=\"2\"");
    if (comparison != nullptr) {
        draw_contour(svg, frame, *comparison,
                     "stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6,4\"");
    }

    // Axes.
    svg << "<rect x=\"" << coord(frame.left) << "\" y=\"" << coord(frame.top) << "\" width=\""
        << coord(frame.right - frame.left) << "\" height=\"" << coord(frame.bottom - frame.top)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int decade = static_cast<int>(std::ceil(frame.x_lo));
         decade <= static_cast<int>(std::floor(frame.x_hi)); ++decade) {
        const double x = frame.x(decade);
        svg << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(frame.bottom) << "\" x2=\""
            << coord(x) << "\" y2=\"" << coord(frame.bottom + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << coord(x) << "\" y=\"" << coord(frame.bottom + 20)
            << "\" text-anchor=\"middle\">" << static_cast<long long>(std::llround(std::pow(10.0, decade)))
            << "</text>\n";
    }
    const double d_lo = result.delta_values.front();
    const double d_hi = result.delta_values.back();
    for (int i = 0; i <= 5; ++i) {
        const double d = d_lo + (d_hi - d_lo) * i / 5.0;
        const double y = frame.y(d);
        svg << "<line x1=\"" << coord(frame.left - 5) << "\" y1=\"" << coord(y) << "\" x2=\""
            << coord(frame.left) << "\" y2=\"" << coord(y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << coord(frame.left - 8) << "\" y=\"" << coord(y + 4)
            << "\" text-anchor=\"end\">" << format_fixed(d, 3) << "</text>\n";
    }
    svg << "<text x=\"340\" y=\"492\" text-anchor=\"middle\">test-set size n (log scale)</text>\n";
    svg << "<text x=\"22\" y=\"250\" text-anchor=\"middle\" transform=\"rotate(-90 22 250)\">"
           "observed difference</text>\n";

    // Colour bar.
    const double bar_x = 630.0;
    const int steps = 50;
    for (int i = 0; i < steps; ++i) {
        const double p = kHeatmapMaxProb * (i + 0.5) / steps;
        const double h = (frame.bottom - frame.top) / steps;
        const double y = frame.bottom - (i + 1) * h;
        svg << "<rect x=\"" << coord(bar_x) << "\" y=\"" << coord(y) << "\" width=\"18\" height=\""
            << coord(h + 0.5) << "\" fill=\"" << heatmap_color(p) << "\"/>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double p = kHeatmapMaxProb * i / 5.0;
        const double y = frame.bottom - (frame.bottom - frame.top) * i / 5.0;
        svg << "<text x=\"" << coord(bar_x + 24) << "\" y=\"" << coord(y + 4) << "\">"
            << format_fixed(p, 2) << "</text>\n";
    }
    svg << "<text x=\"" << coord(bar_x) << "\" y=\"" << coord(frame.top - 10)
        << "\">P(false)</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace falseclaim::io
