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

#include "falseclaim/probability.hpp"
#include "falseclaim/rng.hpp"

/// False-claim probability for paired classifiers.
///
/// The joint correctness of A and B on n cases is a 2x2 multinomial with
/// cell probabilities theta = (theta11, theta10, theta01, theta00) (both
/// correct, only A, only B, neither) and a Dirichlet prior. Accuracies are
/// p_A = theta11 + theta10 and p_B = theta11 + theta01, so the claim is false
/// when theta10 <= theta01. Only marginal accuracies are usually reported, so
/// the table is imputed from the accuracies and a congruence p11 (probability
/// both are correct), with p11 clamped into its feasible range.
///
/// Seed variance enters by treating the reported accuracies as draws
/// p_A ~ N(p_hat_A, delta_A^2), p_B ~ N(p_hat_B, delta_B^2) and averaging the
/// posterior probability over those draws.
namespace falseclaim::clf {

inline constexpr double kDefaultCongruence = 0.67;
/// Baseline accuracy used by the grid sweep (see README, "classification baseline").
inline constexpr double kDefaultBaselineAccuracy = 0.737;
inline constexpr std::int64_t kDefaultMcSamples = 100'000;
inline constexpr std::int64_t kDefaultOuterSamples = 10'000;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Dirichlet weights in cell order (11, 10, 01, 00).
using PriorWeights = std::array<double, 4>;
inline constexpr PriorWeights kFlatPrior = {1.0, 1.0, 1.0, 1.0};

/// How the 2x2 table entering the posterior is formed.
enum class CountMode {
    Expected,  ///< real-valued n * cell probability
    Rounded,   ///< integer table from impute_table
};

enum class InnerPath {
    Exact,       ///< incomplete-beta closed form
    MonteCarlo,  ///< Dirichlet posterior sampling
};

struct ClfComparison {
    double p_hat_a = 0.0;
    double p_hat_b = 0.0;
    std::int64_t n = 1;

    void validate() const;
};

struct ContingencyTable {
    std::int64_t n11 = 0;  ///< both correct
    std::int64_t n10 = 0;  ///< only A correct
    std::int64_t n01 = 0;  ///< only B correct
    std::int64_t n00 = 0;  ///< both wrong

    std::int64_t total() const noexcept { return n11 + n10 + n01 + n00; }
    friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;
};

/// Cell counts entering the Dirichlet posterior; integer tables convert
/// exactly, imputed expected counts may be fractional.
struct CellCounts {
    double c11 = 0.0;
    double c10 = 0.0;
    double c01 = 0.0;
    double c00 = 0.0;

    CellCounts() = default;
    CellCounts(double both, double only_a, double only_b, double neither)
        : c11(both), c10(only_a), c01(only_b), c00(neither) {}
    CellCounts(const ContingencyTable& t)  // NOLINT(google-explicit-constructor)
        : c11(static_cast<double>(t.n11)), c10(static_cast<double>(t.n10)),
          c01(static_cast<double>(t.n01)), c00(static_cast<double>(t.n00)) {}
};

struct ClfParams {
    double congruence_p11 = kDefaultCongruence;
    PriorWeights prior = kFlatPrior;
    double delta_a = 0.0;
    double delta_b = 0.0;
    std::int64_t mc_samples = kDefaultMcSamples;
    std::int64_t outer_samples = kDefaultOuterSamples;
    std::uint64_t seed = kDefaultSeed;
    InnerPath inner = InnerPath::Exact;
    CountMode counts = CountMode::Expected;
    /// Threads for the outer loop; results do not depend on it.
    unsigned workers = 1;

    void validate() const;
};

struct CongruenceBounds {
    double lo;
    double hi;
};

/// Estimate plus its Monte Carlo standard error (0 for deterministic paths).
struct ClfEstimate {
    Probability prob;
    double std_error = 0.0;
};

/// Frechet bounds [max(0, p_a + p_b - 1), min(p_a, p_b)] on P(both correct).
CongruenceBounds congruence_bounds(double p_a, double p_b);

double clamp_congruence(double p11, double p_a, double p_b);

/// Integer table with n cases whose marginals match p_a and p_b to within
/// half a case. The correct-counts of A and B are rounded first, then n11 is
/// rounded and clamped into the integer Frechet bounds, which fixes the two
/// off-diagonal cells and n00. The result is monotone in each accuracy and
/// swapping p_a with p_b swaps n10 with n01.
ContingencyTable impute_table(double p_a, double p_b, double p11, std::int64_t n);

/// n times the feasible cell probabilities (p11 clamped), without rounding.
/// Smooth and monotone in p_a, p_b and n, which the rounded table is not.
CellCounts expected_counts(double p_a, double p_b, double p11, std::int64_t n);

/// Counts for the selected mode.
CellCounts impute_counts(double p_a, double p_b, double p11, std::int64_t n, CountMode mode);

void validate_prior(const PriorWeights& prior);

/// Exact posterior P(theta10 < theta01) = I_{1/2}(n10 + a10, n01 + a01).
Probability clf_false_claim_exact(const CellCounts& counts,
                                  const PriorWeights& prior = kFlatPrior);

/// Fraction of Dirichlet(prior + counts) draws with theta01 > theta10 (ties
/// count one half). Draws are split in fixed blocks, block b using
/// rng.child(b), so the estimate does not depend on `workers`.
Probability clf_false_claim_mc(const CellCounts& counts, const PriorWeights& prior,
                               std::int64_t mc_samples, const Rng& rng, unsigned workers = 1);

/// Posterior false-claim probability averaged over seed-perturbed accuracies.
/// With delta_a = delta_b = 0 this is exactly the unperturbed posterior.
ClfEstimate clf_false_claim_underspec(const ClfComparison& cmp, const ClfParams& params);

/// Large-n limit when only seed variance remains:
/// Phi(-delta_obs / sqrt(delta_a^2 + delta_b^2)).
Probability clf_asymptotic_floor(double delta_obs, double delta_a, double delta_b);

}  // namespace falseclaim::clf
