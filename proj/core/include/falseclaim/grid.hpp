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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "falseclaim/clf_model.hpp"
#include "falseclaim/seg_model.hpp"
#include "falseclaim/task.hpp"

namespace falseclaim::grid {

/// Sweep over test-set size n (columns) and observed difference delta (rows).
struct GridSpec {
    Task task = Task::Segmentation;
    std::vector<std::int64_t> n_values;
    std::vector<double> delta_values;
    /// Accuracy of method B for classification; A sits at baseline + delta.
    double baseline = clf::kDefaultBaselineAccuracy;
    seg::SegParams seg_params{};
    clf::ClfParams clf_params{};
    double threshold = kConcernThreshold;
    /// 0 = one per hardware thread. Never changes the result.
    unsigned workers = 0;

    /// Default axes: 30 log-spaced n in [10, 10000], 50 linear delta in [0, 0.1].
    static GridSpec with_default_axes(Task task);

    void validate() const;

    /// Seed-variance value reported in the CSV `delta_seed` column.
    double seed_delta() const;
};

struct GridCell {
    double prob = 0.0;
    double std_error = 0.0;
    bool valid = true;
};

struct GridResult {
    Task task = Task::Segmentation;
    double seed_delta = 0.0;
    double threshold = kConcernThreshold;
    std::vector<std::int64_t> n_values;
    std::vector<double> delta_values;
    /// cells[delta_index][n_index]
    std::vector<std::vector<GridCell>> cells;
    /// Per n: smallest delta with prob <= threshold, interpolated; empty if none.
    std::vector<std::optional<double>> contour;

    const GridCell& at(std::size_t delta_index, std::size_t n_index) const {
        return cells[delta_index][n_index];
    }
};

struct ContourShift {
    std::int64_t n;
    std::optional<double> baseline;
    std::optional<double> underspec;
    /// underspec - baseline when both exist.
    std::optional<double> shift;
};

/// A probability column rose with delta by more than sampling noise allows.
class MonotonicityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `count` integers log-spaced on [lo, hi], rounded and de-duplicated.
std::vector<std::int64_t> log_spaced_counts(std::int64_t lo, std::int64_t hi, std::size_t count);

/// `count` evenly spaced reals on [lo, hi] (both ends included).
std::vector<double> linear_values(double lo, double hi, std::size_t count);

/// Model probability for one (delta, n) cell; invalid when the classification
/// accuracy baseline + delta leaves [0, 1].
GridCell evaluate_cell(const GridSpec& spec, double delta, std::int64_t n);

/// Contour along one column given its cells ordered by delta.
std::optional<double> threshold_crossing(const std::vector<double>& deltas,
                                         const std::vector<GridCell>& column, double threshold);

GridResult run_grid(const GridSpec& spec);

/// Pairs the two contours per n. Throws UsageError when the axes differ.
std::vector<ContourShift> compare_grids(const GridResult& baseline, const GridResult& underspec);

}  // namespace falseclaim::grid
