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
#include <ostream>
#include <span>
#include <string_view>

#include "falseclaim/task.hpp"

namespace falseclaim::io {

/// Run-to-run standard deviation of a reported metric across random seeds,
/// as measured by a reproducibility study.
struct SeedVarianceRecord {
    Task task;
    std::string_view name;
    std::int64_t n_train;
    std::int64_t n_test;
    double sigma_indiv;
    std::optional<double> sigma_ensemble;  ///< not reported for every study
};

/// The seven published records: three segmentation (Dice) and four
/// classification (AUROC) studies.
std::span<const SeedVarianceRecord> builtin_seed_variance();

/// Seed-variance value used by default for both tasks.
inline constexpr double kSummarySeedDelta = 0.01;
inline constexpr double kSeedDeltaRangeLow = 0.002;
inline constexpr double kSeedDeltaRangeHigh = 0.024;

/// Prints the table plus the summary delta and observed range.
void print_seed_variance(std::ostream& out);

}  // namespace falseclaim::io
