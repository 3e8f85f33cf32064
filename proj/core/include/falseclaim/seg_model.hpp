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

#include "falseclaim/probability.hpp"

/// Closed-form false-claim probability for paired segmentation scores.
///
/// The claim "A beats B" is false when the true means satisfy mu_A <= mu_B.
/// Given observed means, per-case score spreads s_A and s_B, the paired
/// correlation r_AB and test-set size n, the probability of that event is
///
///     T_{n-1}((mu_hat_B - mu_hat_A) / SE),
///     SE^2 = (s_A^2 + s_B^2 - 2 s_A s_B r_AB) / n + delta_A^2 + delta_B^2
///
/// where delta_A and delta_B are the run-to-run (random seed) standard
/// deviations of each method's mean score. With both deltas at zero this is
/// the plain paired t model. Degrees of freedom stay at n - 1 when the seed
/// terms are present.
namespace falseclaim::seg {

inline constexpr double kDefaultSpread = 0.197;
inline constexpr double kDefaultCongruence = 0.67;

struct SegParams {
    double s_a = kDefaultSpread;
    double s_b = kDefaultSpread;
    double r_ab = kDefaultCongruence;
    double delta_a = 0.0;
    double delta_b = 0.0;

    /// Throws DomainError on negative spreads or |r_ab| > 1.
    void validate() const;
};

struct SegComparison {
    double mu_hat_a = 0.0;
    double mu_hat_b = 0.0;
    std::int64_t n = 2;

    /// Means in [0, 1] and n >= 2. The ordering mu_hat_a >= mu_hat_b is not
    /// required here; claim-level validation enforces it.
    void validate() const;

    double observed_difference() const noexcept { return mu_hat_a - mu_hat_b; }
};

/// A model probability plus a flag for the SE = 0 corner, where the t
/// statistic is undefined and a boundary value is returned instead.
struct SegEstimate {
    Probability prob;
    bool degenerate = false;
};

double seg_standard_error(const SegParams& params, std::int64_t n);

SegEstimate seg_false_claim_prob(const SegComparison& cmp, const SegParams& params);

/// n -> infinity limit of seg_false_claim_prob when seed variance is present:
/// Phi(-delta_obs / sqrt(delta_a^2 + delta_b^2)). Throws DomainError when both
/// deltas are zero.
Probability seg_asymptotic_floor(double delta_obs, double delta_a, double delta_b);

}  // namespace falseclaim::seg
