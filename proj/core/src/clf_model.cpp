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

#include "falseclaim/clf_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "falseclaim/parallel.hpp"
#include "falseclaim/sampling.hpp"
#include "falseclaim/special.hpp"

namespace falseclaim::clf {

namespace {

constexpr std::int64_t kMcBlock = 8192;
constexpr std::int64_t kOuterBlock = 512;

bool unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Round to the nearest count; values within 1e-9 of a half-integer are
// snapped first so that products such as 100 * 0.735 round consistently.
std::int64_t round_count(double x) {
    const double half = std::round(2.0 * x) / 2.0;
    if (std::fabs(x - half) <= 1e-9 * std::max(1.0, std::fabs(x))) x = half;
    return std::llround(x);
}

// Running mean and sum of squared deviations (Welford); blocks are merged
// with Chan's pairwise update in block order.
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        const double d = x - mean;
        mean += d / count;
        m2 += d * (x - mean);
    }
    void merge(const Moments& o) {
        if (o.count == 0.0) return;
        const double total = count + o.count;
        const double d = o.mean - mean;
        mean += d * (o.count / total);
        m2 += o.m2 + d * d * (count * o.count / total);
        count = total;
    }
};

}  // namespace

void ClfComparison::validate() const {
    if (!unit_interval(p_hat_a) || !unit_interval(p_hat_b)) {
        throw DomainError("accuracies must lie in [0, 1]");
    }
    if (n < 1) throw DomainError("test-set size n must be >= 1, got " + std::to_string(n));
}

void validate_prior(const PriorWeights& prior) {
    for (double a : prior) {
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw DomainError("Dirichlet prior weights must be finite and > 0");
        }
    }
}

void ClfParams::validate() const {
    if (!unit_interval(congruence_p11)) {
        throw DomainError("congruence p11 must lie in [0, 1]");
    }
    validate_prior(prior);
    if (!(delta_a >= 0.0) || !(delta_b >= 0.0) || !std::isfinite(delta_a) ||
        !std::isfinite(delta_b)) {
        throw DomainError("seed deltas must be >= 0");
    }
    if (mc_samples < 1) throw DomainError("mc_samples must be >= 1");
    if (outer_samples < 1) throw DomainError("outer_samples must be >= 1");
}

CongruenceBounds congruence_bounds(double p_a, double p_b) {
    return {std::max(0.0, p_a + p_b - 1.0), std::min(p_a, p_b)};
}

double clamp_congruence(double p11, double p_a, double p_b) {
    const auto [lo, hi] = congruence_bounds(p_a, p_b);
    return std::clamp(p11, lo, hi);
}

ContingencyTable impute_table(double p_a, double p_b, double p11, std::int64_t n) {
    if (n < 1) throw DomainError("test-set size n must be >= 1");
    if (!unit_interval(p_a) || !unit_interval(p_b) || !unit_interval(p11)) {
        throw DomainError("impute_table inputs must lie in [0, 1]");
    }
    const double scale = static_cast<double>(n);
    const std::int64_t correct_a = round_count(scale * p_a);
    const std::int64_t correct_b = round_count(scale * p_b);
    std::int64_t both = round_count(scale * clamp_congruence(p11, p_a, p_b));
    both = std::clamp(both, std::max<std::int64_t>(0, correct_a + correct_b - n),
                      std::min(correct_a, correct_b));
    return {both, correct_a - both, correct_b - both, n - correct_a - correct_b + both};
}

CellCounts expected_counts(double p_a, double p_b, double p11, std::int64_t n) {
    if (n < 1) throw DomainError("test-set size n must be >= 1");
    if (!unit_interval(p_a) || !unit_interval(p_b) || !unit_interval(p11)) {
        throw DomainError("expected_counts inputs must lie in [0, 1]");
    }
    const double scale = static_cast<double>(n);
    const double both = clamp_congruence(p11, p_a, p_b);
    return {scale * both, scale * std::max(0.0, p_a - both), scale * std::max(0.0, p_b - both),
            scale * std::max(0.0, 1.0 - p_a - p_b + both)};
}

CellCounts impute_counts(double p_a, double p_b, double p11, std::int64_t n, CountMode mode) {
    if (mode == CountMode::Rounded) return impute_table(p_a, p_b, p11, n);
    return expected_counts(p_a, p_b, p11, n);
}

Probability clf_false_claim_exact(const CellCounts& counts, const PriorWeights& prior) {
    validate_prior(prior);
    return special::reg_inc_beta(0.5, counts.c10 + prior[1], counts.c01 + prior[2]);
}

Probability clf_false_claim_mc(const CellCounts& counts, const PriorWeights& prior,
                               std::int64_t mc_samples, const Rng& rng, unsigned workers) {
    validate_prior(prior);
    if (mc_samples < 1) throw DomainError("mc_samples must be >= 1");
    const std::array<double, 4> alphas = {counts.c11 + prior[0], counts.c10 + prior[1],
                                          counts.c01 + prior[2], counts.c00 + prior[3]};

    const std::int64_t blocks = (mc_samples + kMcBlock - 1) / kMcBlock;
    // Twice the count of theta01 > theta10 plus ties, per block.
    std::vector<std::int64_t> doubled(static_cast<std::size_t>(blocks), 0);
    parallel_for(static_cast<std::size_t>(blocks), workers, [&](std::size_t b) {
        Rng local = rng.child(b);
        const std::int64_t begin = static_cast<std::int64_t>(b) * kMcBlock;
        const std::int64_t end = std::min(mc_samples, begin + kMcBlock);
        std::array<double, 4> theta{};
        std::int64_t count = 0;
        for (std::int64_t i = begin; i < end; ++i) {
            sample_dirichlet(alphas, local, theta);
            if (theta[2] > theta[1]) {
                count += 2;
            } else if (theta[2] == theta[1]) {
                count += 1;
            }
        }
        doubled[b] = count;
    });
    std::int64_t total = 0;
    for (std::int64_t c : doubled) total += c;
    return Probability::clamped(static_cast<double>(total) /
                                (2.0 * static_cast<double>(mc_samples)));
}

ClfEstimate clf_false_claim_underspec(const ClfComparison& cmp, const ClfParams& params) {
    cmp.validate();
    params.validate();
    const Rng root(params.seed);

    auto inner = [&](const CellCounts& counts, Rng& rng) -> double {
        if (params.inner == InnerPath::Exact) {
            return clf_false_claim_exact(counts, params.prior).value();
        }
        const Rng draw_rng(rng());
        return clf_false_claim_mc(counts, params.prior, params.mc_samples, draw_rng).value();
    };
    auto counts_for = [&](double p_a, double p_b) {
        return impute_counts(p_a, p_b, params.congruence_p11, cmp.n, params.counts);
    };

    if (params.delta_a == 0.0 && params.delta_b == 0.0) {
        Rng rng = root.child(0);
        return {Probability(inner(counts_for(cmp.p_hat_a, cmp.p_hat_b), rng)), 0.0};
    }
    // Rounded tables repeat across draws; memoise their exact posterior.
    const bool memoise = params.inner == InnerPath::Exact && params.counts == CountMode::Rounded;

    const std::int64_t draws = params.outer_samples;
    const std::int64_t blocks = (draws + kOuterBlock - 1) / kOuterBlock;
    std::vector<Moments> partial(static_cast<std::size_t>(blocks));
    parallel_for(static_cast<std::size_t>(blocks), params.workers, [&](std::size_t b) {
        Rng rng = root.child(b);
        std::unordered_map<std::uint64_t, double> memo;
        const std::int64_t begin = static_cast<std::int64_t>(b) * kOuterBlock;
        const std::int64_t end = std::min(draws, begin + kOuterBlock);
        Moments moments;
        for (std::int64_t i = begin; i < end; ++i) {
            const double p_a = clamp01(sample_normal(cmp.p_hat_a, params.delta_a, rng));
            const double p_b = clamp01(sample_normal(cmp.p_hat_b, params.delta_b, rng));
            const auto counts = counts_for(p_a, p_b);
            double value;
            if (memoise) {
                const auto key = (static_cast<std::uint64_t>(counts.c10) << 32) |
                                 static_cast<std::uint64_t>(counts.c01);
                auto it = memo.find(key);
                if (it == memo.end()) it = memo.emplace(key, inner(counts, rng)).first;
                value = it->second;
            } else {
                value = inner(counts, rng);
            }
            moments.add(value);
        }
        partial[b] = moments;
    });

    Moments total;
    for (const auto& m : partial) total.merge(m);
    const double var = total.m2 / total.count;
    return {Probability::clamped(total.mean), std::sqrt(std::max(0.0, var) / total.count)};
}

Probability clf_asymptotic_floor(double delta_obs, double delta_a, double delta_b) {
    if (!(delta_a >= 0.0) || !(delta_b >= 0.0)) {
        throw DomainError("seed deltas must be >= 0");
    }
    const double spread = std::sqrt(delta_a * delta_a + delta_b * delta_b);
    if (spread == 0.0) {
        throw DomainError("asymptotic floor needs a non-zero seed variance");
    }
    return special::normal_cdf(-delta_obs / spread);
}

}  // namespace falseclaim::clf
