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

#include "falseclaim/calibrate.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "falseclaim/parallel.hpp"

namespace falseclaim::calib {

namespace {

constexpr double kInfeasible = std::numeric_limits<double>::infinity();

// Strictly better, or equal SSE at a smaller s.
bool improves(const CandidateScore& c, const CandidateScore& best) {
    return c.sse < best.sse || (c.sse == best.sse && c.s < best.s);
}

}  // namespace

void ReferencePoint::validate() const {
    if (n < 2) throw DomainError("reference n must be >= 2, got " + std::to_string(n));
    if (!(delta_obs >= -1.0 && delta_obs <= 1.0)) {
        throw DomainError("reference delta must lie in [-1, 1]");
    }
    if (!(target_prob >= 0.0 && target_prob <= 1.0)) {
        throw DomainError("reference target_prob must lie in [0, 1]");
    }
}

void CalibrationSpec::validate() const {
    if (!(s_min > 0.0) || !(s_min < s_max) || !std::isfinite(s_max)) {
        throw DomainError("calibration range needs 0 < s_min < s_max");
    }
    if (steps < 2) throw DomainError("calibration needs at least 2 grid steps");
    seg_fixed.validate();
    clf_fixed.validate();
}

double candidate(const CalibrationSpec& spec, std::int64_t i) {
    const double step = (spec.s_max - spec.s_min) / static_cast<double>(spec.steps - 1);
    return i == spec.steps - 1 ? spec.s_max : spec.s_min + static_cast<double>(i) * step;
}

double model_probability(const CalibrationSpec& spec, double s, const ReferencePoint& ref) {
    if (spec.task == Task::Segmentation) {
        seg::SegParams params = spec.seg_fixed;
        params.s_a = s;
        params.s_b = s;
        const seg::SegComparison cmp{0.5 + 0.5 * ref.delta_obs, 0.5 - 0.5 * ref.delta_obs, ref.n};
        return seg::seg_false_claim_prob(cmp, params).prob.value();
    }
    const double p_b = s;
    const double p_a = s + ref.delta_obs;
    if (!(p_a >= 0.0 && p_a <= 1.0) || !(p_b >= 0.0 && p_b <= 1.0)) return kInfeasible;
    const clf::ClfComparison cmp{p_a, p_b, ref.n};
    return clf::clf_false_claim_underspec(cmp, spec.clf_fixed).prob.value();
}

double sum_squared_error(const CalibrationSpec& spec, double s,
                         std::span<const ReferencePoint> refs) {
    double sse = 0.0;
    for (const auto& ref : refs) {
        const double p = model_probability(spec, s, ref);
        if (!std::isfinite(p)) return kInfeasible;
        const double err = p - ref.target_prob;
        sse += err * err;
    }
    return sse;
}

CalibrationResult calibrate_s(const CalibrationSpec& spec, std::span<const ReferencePoint> refs) {
    if (refs.empty()) throw UsageError("calibration needs at least one reference point");
    spec.validate();
    for (const auto& ref : refs) ref.validate();

    CalibrationResult result{spec.s_min, kInfeasible, {}};
    result.trace.resize(static_cast<std::size_t>(spec.steps));
    parallel_for(result.trace.size(), spec.workers, [&](std::size_t i) {
        const double s = candidate(spec, static_cast<std::int64_t>(i));
        result.trace[i] = {s, sum_squared_error(spec, s, refs)};
    });

    CandidateScore best{spec.s_min, kInfeasible};
    for (const auto& c : result.trace) {
        if (improves(c, best)) best = c;
    }

    if (spec.refine && std::isfinite(best.sse)) {
        const double half = 0.5 * (spec.s_max - spec.s_min) / static_cast<double>(spec.steps - 1);
        for (double s : {best.s - half, best.s + half}) {
            if (s < spec.s_min || s > spec.s_max) continue;
            const CandidateScore c{s, sum_squared_error(spec, s, refs)};
            result.trace.push_back(c);
            if (improves(c, best)) best = c;
        }
    }
    result.s_best = best.s;
    result.sse = best.sse;
    return result;
}

}  // namespace falseclaim::calib
