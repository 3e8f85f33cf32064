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
#include <span>
#include <vector>

#include "falseclaim/clf_model.hpp"
#include "falseclaim/seg_model.hpp"
#include "falseclaim/task.hpp"

/// Exhaustive grid search for the spread parameter s = s_A = s_B.
///
/// For segmentation s is the per-case score SD of both methods. For
/// classification the Dirichlet model has no per-case spread, so s is read as
/// the baseline accuracy of method B (A sits at s + delta).
namespace falseclaim::calib {

struct ReferencePoint {
    std::int64_t n = 2;
    double delta_obs = 0.0;
    double target_prob = 0.5;

    void validate() const;
};

struct CalibrationSpec {
    Task task = Task::Segmentation;
    double s_min = 0.05;
    double s_max = 0.5;
    std::int64_t steps = 451;
    /// One extra pass at +-half a step around the grid optimum.
    bool refine = false;
    seg::SegParams seg_fixed{};
    clf::ClfParams clf_fixed{};
    unsigned workers = 1;

    void validate() const;
};

struct CandidateScore {
    double s;
    double sse;  ///< +inf when the candidate is infeasible for some reference
};

struct CalibrationResult {
    double s_best;
    double sse;
    std::vector<CandidateScore> trace;
};

/// Model false-claim probability for one reference point at spread s.
double model_probability(const CalibrationSpec& spec, double s, const ReferencePoint& ref);

/// Sum of squared errors over all references at spread s.
double sum_squared_error(const CalibrationSpec& spec, double s,
                         std::span<const ReferencePoint> refs);

/// Grid candidate i of spec.steps, evenly spaced on [s_min, s_max].
double candidate(const CalibrationSpec& spec, std::int64_t i);

/// Returns the SSE-minimizing candidate, ties going to the smaller s.
/// Throws UsageError on an empty reference set.
CalibrationResult calibrate_s(const CalibrationSpec& spec, std::span<const ReferencePoint> refs);

}  // namespace falseclaim::calib
