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

#include "falseclaim/io/seed_variance.hpp"

#include <array>

#include "falseclaim/io/csv.hpp"

namespace falseclaim::io {

namespace {

constexpr std::array<SeedVarianceRecord, 7> kRecords = {{
    {Task::Segmentation, "brain tumor", 387, 97, 0.010, std::nullopt},
    {Task::Segmentation, "prostate", 32, 16, 0.017, 0.006},
    {Task::Segmentation, "pancreas", 281, 82, 0.002, 0.001},
    {Task::Classification, "prostate cancer", 417, 157, 0.010, 0.008},
    {Task::Classification, "pancreatic cancer", 537, 188, 0.022, 0.012},
    {Task::Classification, "lymph node 2D", 274, 91, 0.024, 0.005},
    {Task::Classification, "lymph node 3D", 274, 91, 0.012, 0.005},
}};

}  // namespace

std::span<const SeedVarianceRecord> builtin_seed_variance() { return kRecords; }

void print_seed_variance(std::ostream& out) {
    out << "task, name, n_train, n_test, sigma_indiv, sigma_ensemble\n";
    for (const auto& r : kRecords) {
        out << task_name(r.task) << ", " << r.name << ", " << r.n_train << ", " << r.n_test
            << ", " << format_fixed(r.sigma_indiv, 3) << ", "
            << (r.sigma_ensemble ? format_fixed(*r.sigma_ensemble, 3) : std::string("N/A"))
            << '\n';
    }
    out << "summary delta = " << format_fixed(kSummarySeedDelta, 2)
        << " (median across observed variabilities)\n";
    out << "range: " << format_fixed(kSeedDeltaRangeLow, 3) << "-"
        << format_fixed(kSeedDeltaRangeHigh, 3) << '\n';
}

}  // namespace falseclaim::io
