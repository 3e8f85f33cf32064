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

#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "falseclaim/grid.hpp"

namespace falseclaim::io {

/// One line of the grid CSV: `task,delta_seed,n,delta_obs,prob`.
/// Invalid cells carry an empty prob field.
struct GridCsvRecord {
    std::string task;
    double delta_seed;
    std::int64_t n;
    double delta_obs;
    std::optional<double> prob;
};

/// One line of the contour CSV: `n,delta_at_threshold` (empty when no delta
/// in range reaches the threshold).
struct ContourCsvRecord {
    std::int64_t n;
    std::optional<double> delta_at_threshold;
};

std::vector<GridCsvRecord> grid_records(const grid::GridResult& result);
std::vector<ContourCsvRecord> contour_records(const grid::GridResult& result);

void write_grid_csv(std::ostream& out, const std::vector<GridCsvRecord>& records);
void write_contour_csv(std::ostream& out, const std::vector<ContourCsvRecord>& records);

/// Parsers for the files above; throw UsageError naming the bad line.
std::vector<GridCsvRecord> read_grid_csv(std::istream& in);
std::vector<ContourCsvRecord> read_contour_csv(std::istream& in);

/// Fixed 9-stop sequential ramp (light yellow to dark red) used by the heatmap.
inline constexpr std::array<std::string_view, 9> kHeatmapRamp = {
    "#ffffcc", "#ffeda0", "#fed976", "#feb24c", "#fd8d3c",
    "#fc4e2a", "#e31a1c", "#bd0026", "#800026"};

/// Probability mapped to the top of the ramp; larger values saturate.
inline constexpr double kHeatmapMaxProb = 0.5;

/// Colour for a probability, linearly interpolated between ramp stops.
std::string heatmap_color(double prob);

/// Heatmap of a grid: log-scaled n on the horizontal axis, delta vertical,
/// threshold contour as a solid line. When `comparison` is given its contour
/// is overdrawn dashed (typically the no-seed-variance baseline).
std::string render_heatmap_svg(const grid::GridResult& result,
                               const grid::GridResult* comparison, std::string_view title);

}  // namespace falseclaim::io
