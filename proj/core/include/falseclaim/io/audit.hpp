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
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "falseclaim/clf_model.hpp"
#include "falseclaim/probability.hpp"
#include "falseclaim/seg_model.hpp"
#include "falseclaim/task.hpp"

/// Batch evaluation of reported comparisons.
///
/// Input header: `task,mu_a,mu_b,n,spread_or_congruence,delta_a,delta_b`.
/// For segmentation rows the spread column is s (= s_A = s_B) and the paired
/// correlation comes from AuditOptions; for classification rows it is the
/// congruence p11. Output repeats the input columns and appends
/// `p_false_baseline,p_false_underspec,verdict`.
namespace falseclaim::io {

struct AuditOptions {
    double seg_congruence = seg::kDefaultCongruence;
    /// Prior, budgets, inner path and seed for classification rows; the
    /// congruence and deltas come from each row.
    clf::ClfParams clf{};
};

struct AuditRow {
    Task task = Task::Segmentation;
    double mu_a = 0.0;
    double mu_b = 0.0;
    std::int64_t n = 2;
    double spread = 0.0;
    double delta_a = 0.0;
    double delta_b = 0.0;

    /// Throws DomainError naming the violated invariant.
    void validate() const;
};

struct AuditOutcome {
    Probability baseline;   ///< deltas forced to zero
    Probability underspec;  ///< deltas from the row
};

struct AuditError {
    std::size_t line;
    std::string message;
};

struct AuditReport {
    std::size_t rows = 0;
    std::vector<AuditError> errors;
};

/// Parses one data row; throws UsageError/DomainError with a reason.
AuditRow parse_audit_row(const std::vector<std::string>& fields);

/// `row_index` selects the random stream for classification rows.
AuditOutcome evaluate_audit_row(const AuditRow& row, const AuditOptions& options,
                                std::uint64_t row_index);

/// Processes every row, writing valid and invalid rows in input order
/// (invalid rows keep empty probabilities and verdict INVALID).
AuditReport run_audit(std::istream& in, std::ostream& out, const AuditOptions& options);

}  // namespace falseclaim::io
