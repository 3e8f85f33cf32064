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

#include "falseclaim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "falseclaim/parallel.hpp"
#include "falseclaim/rng.hpp"

namespace falseclaim::grid {

namespace {

// Cleanup tolerance on top of 2 MC standard errors, for rounding in the
// closed-form paths.
constexpr double kRoundingSlack = 1e-12;

// Seed for every classification cell in column n. Keyed by the value of n
// rather than its index, so a sub-grid reproduces the same cells, and shared
// by all delta rows of the column (common random numbers), which keeps the
// column monotone draw by draw.
std::uint64_t column_seed(std::uint64_t seed, std::int64_t n) {
    return mix64(seed ^ mix64(static_cast<std::uint64_t>(n)));
}

void enforce_monotone(std::vector<GridCell>& column, std::int64_t n) {
    const GridCell* floor = nullptr;
    for (auto& cell : column) {
        if (!cell.valid) continue;
        if (floor != nullptr && cell.prob > floor->prob) {
            const double excess = cell.prob - floor->prob;
            const double tolerance =
                2.0 * std::max(cell.std_error, floor->std_error) + kRoundingSlack;
            if (excess > tolerance) {
                throw MonotonicityError("probability rises with delta by " +
                                        std::to_string(excess) + " in column n=" +
                                        std::to_string(n));
            }
            cell.prob = floor->prob;
        }
        floor = &cell;
    }
}

}  // namespace

GridSpec GridSpec::with_default_axes(Task task) {
    GridSpec spec;
    spec.task = task;
    spec.n_values = log_spaced_counts(10, 10000, 30);
    spec.delta_values = linear_values(0.0, 0.10, 50);
    return spec;
}

void GridSpec::validate() const {
    if (n_values.empty() || delta_values.empty()) {
        throw UsageError("grid axes must be non-empty");
    }
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] < 2) throw DomainError("grid n values must be >= 2");
        if (i > 0 && n_values[i] <= n_values[i - 1]) {
            throw DomainError("grid n values must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < delta_values.size(); ++i) {
        if (!(delta_values[i] >= 0.0 && delta_values[i] <= 1.0)) {
            throw DomainError("grid delta values must lie in [0, 1]");
        }
        if (i > 0 && delta_values[i] <= delta_values[i - 1]) {
            throw DomainError("grid delta values must be strictly increasing");
        }
    }
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw DomainError("contour threshold must lie in [0, 1]");
    }
    if (task == Task::Segmentation) {
        seg_params.validate();
    } else {
        clf_params.validate();
        if (!(baseline >= 0.0 && baseline <= 1.0)) {
            throw DomainError("classification baseline must lie in [0, 1]");
        }
        if (baseline + delta_values.back() > 1.0) {
            throw DomainError("classification baseline + max delta exceeds 1");
        }
    }
}

double GridSpec::seed_delta() const {
    return task == Task::Segmentation ? seg_params.delta_a : clf_params.delta_a;
}

std::vector<std::int64_t> log_spaced_counts(std::int64_t lo, std::int64_t hi, std::size_t count) {
    if (lo < 1 || hi < lo || count == 0) throw DomainError("invalid log-spaced range");
    std::vector<std::int64_t> out;
    if (count == 1) return {lo};
    const double log_lo = std::log(static_cast<double>(lo));
    const double log_hi = std::log(static_cast<double>(hi));
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        const auto v = i + 1 == count ? hi : std::llround(std::exp(log_lo + t * (log_hi - log_lo)));
        if (out.empty() || v > out.back()) out.push_back(v);
    }
    return out;
}

std::vector<double> linear_values(double lo, double hi, std::size_t count) {
    if (count == 0 || !(hi >= lo)) throw DomainError("invalid linear range");
    if (count == 1) return {lo};
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = i + 1 == count ? hi
                                : lo + (hi - lo) * static_cast<double>(i) /
                                           static_cast<double>(count - 1);
    }
    return out;
}

GridCell evaluate_cell(const GridSpec& spec, double delta, std::int64_t n) {
    if (spec.task == Task::Segmentation) {
        // Only the difference enters the model.
        const seg::SegComparison cmp{delta, 0.0, n};
        return {seg::seg_false_claim_prob(cmp, spec.seg_params).prob.value(), 0.0, true};
    }
    const double p_a = spec.baseline + delta;
    if (p_a > 1.0 || p_a < 0.0) return {0.0, 0.0, false};
    clf::ClfParams params = spec.clf_params;
    params.seed = column_seed(spec.clf_params.seed, n);
    params.workers = 1;
    const auto est = clf::clf_false_claim_underspec({p_a, spec.baseline, n}, params);
    return {est.prob.value(), est.std_error, true};
}

std::optional<double> threshold_crossing(const std::vector<double>& deltas,
                                         const std::vector<GridCell>& column, double threshold) {
    const GridCell* prev = nullptr;
    double prev_delta = 0.0;
    for (std::size_t i = 0; i < column.size(); ++i) {
        const GridCell& cell = column[i];
        if (!cell.valid) continue;
        if (cell.prob <= threshold) {
            if (prev == nullptr) return deltas[i];
            const double frac = (prev->prob - threshold) / (prev->prob - cell.prob);
            return prev_delta + frac * (deltas[i] - prev_delta);
        }
        prev = &cell;
        prev_delta = deltas[i];
    }
    return std::nullopt;
}

GridResult run_grid(const GridSpec& spec) {
    spec.validate();
    const std::size_t rows = spec.delta_values.size();
    const std::size_t cols = spec.n_values.size();

    GridResult result;
    result.task = spec.task;
    result.seed_delta = spec.seed_delta();
    result.threshold = spec.threshold;
    result.n_values = spec.n_values;
    result.delta_values = spec.delta_values;
    result.cells.assign(rows, std::vector<GridCell>(cols));

    parallel_for(rows * cols, spec.workers, [&](std::size_t k) {
        const std::size_t r = k / cols;
        const std::size_t c = k % cols;
        result.cells[r][c] = evaluate_cell(spec, spec.delta_values[r], spec.n_values[c]);
    });

    result.contour.resize(cols);
    std::vector<GridCell> column(rows);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) column[r] = result.cells[r][c];
        enforce_monotone(column, spec.n_values[c]);
        for (std::size_t r = 0; r < rows; ++r) result.cells[r][c] = column[r];
        result.contour[c] = threshold_crossing(spec.delta_values, column, spec.threshold);
    }
    return result;
}

std::vector<ContourShift> compare_grids(const GridResult& baseline, const GridResult& underspec) {
    if (baseline.n_values != underspec.n_values ||
        baseline.delta_values != underspec.delta_values) {
        throw UsageError("grids do not share the same axes");
    }
    std::vector<ContourShift> out;
    out.reserve(baseline.n_values.size());
    for (std::size_t c = 0; c < baseline.n_values.size(); ++c) {
        ContourShift row{baseline.n_values[c], baseline.contour[c], underspec.contour[c], {}};
        if (row.baseline && row.underspec) row.shift = *row.underspec - *row.baseline;
        out.push_back(row);
    }
    return out;
}

}  // namespace falseclaim::grid
