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

#include "falseclaim/seg_model.hpp"

#include <cmath>
#include <string>

#include "falseclaim/special.hpp"

namespace falseclaim::seg {

namespace {

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void SegParams::validate() const {
    if (!finite_nonneg(s_a) || !finite_nonneg(s_b)) {
        throw DomainError("segmentation spreads s_a, s_b must be >= 0");
    }
    if (!finite_nonneg(delta_a) || !finite_nonneg(delta_b)) {
        throw DomainError("seed deltas must be >= 0");
    }
    if (!(r_ab >= -1.0 && r_ab <= 1.0)) {
        throw DomainError("congruence r_ab must lie in [-1, 1], got " + std::to_string(r_ab));
    }
}

void SegComparison::validate() const {
    if (!(mu_hat_a >= 0.0 && mu_hat_a <= 1.0) || !(mu_hat_b >= 0.0 && mu_hat_b <= 1.0)) {
        throw DomainError("observed means must lie in [0, 1]");
    }
    if (n < 2) {
        throw DomainError("test-set size n must be >= 2, got " + std::to_string(n));
    }
}

double seg_standard_error(const SegParams& params, std::int64_t n) {
    params.validate();
    if (n < 1) throw DomainError("test-set size n must be >= 1");
    double paired = params.s_a * params.s_a + params.s_b * params.s_b -
                    2.0 * params.s_a * params.s_b * params.r_ab;
    if (paired < 0.0) paired = 0.0;  // rounding at r_ab = 1
    const double variance = paired / static_cast<double>(n) +
                            params.delta_a * params.delta_a + params.delta_b * params.delta_b;
    return std::sqrt(variance);
}

SegEstimate seg_false_claim_prob(const SegComparison& cmp, const SegParams& params) {
    cmp.validate();
    const double se = seg_standard_error(params, cmp.n);
    const double diff = cmp.mu_hat_b - cmp.mu_hat_a;
    if (se == 0.0) {
        if (diff == 0.0) return {Probability(0.5), true};
        return {Probability(diff < 0.0 ? 0.0 : 1.0), true};
    }
    const double df = static_cast<double>(cmp.n - 1);
    return {special::student_t_cdf(diff / se, df), false};
}

Probability seg_asymptotic_floor(double delta_obs, double delta_a, double delta_b) {
    if (!finite_nonneg(delta_a) || !finite_nonneg(delta_b)) {
        throw DomainError("seed deltas must be >= 0");
    }
    const double spread = std::sqrt(delta_a * delta_a + delta_b * delta_b);
    if (spread == 0.0) {
        throw DomainError("asymptotic floor needs a non-zero seed variance");
    }
    return special::normal_cdf(-delta_obs / spread);
}

}  // namespace falseclaim::seg
