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

#include "falseclaim/io/audit.hpp"

#include <cmath>

#include "falseclaim/io/csv.hpp"
#include "falseclaim/rng.hpp"

namespace falseclaim::io {

namespace {

const std::vector<std::string> kAuditHeader = {
    "task", "mu_a", "mu_b", "n", "spread_or_congruence", "delta_a", "delta_b"};
const std::vector<std::string> kAuditExtra = {"p_false_baseline", "p_false_underspec",
                                              "verdict"};

double require_number(const std::string& text, const char* column) {
    const auto v = parse_double(text);
    if (!v) throw UsageError(std::string("column ") + column + ": not a number: '" + text + "'");
    return *v;
}

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void AuditRow::validate() const {
    if (!in_unit(mu_a) || !in_unit(mu_b)) throw DomainError("mu_a and mu_b must lie in [0, 1]");
    if (mu_a < mu_b) throw DomainError("claim requires mu_a >= mu_b");
    if (!(delta_a >= 0.0) || !(delta_b >= 0.0)) throw DomainError("deltas must be >= 0");
    if (task == Task::Segmentation) {
        if (n < 2) throw DomainError("segmentation needs n >= 2");
        if (!(spread >= 0.0)) throw DomainError("spread s must be >= 0");
    } else {
        if (n < 1) throw DomainError("classification needs n >= 1");
        if (!in_unit(spread)) throw DomainError("congruence must lie in [0, 1]");
    }
}

AuditRow parse_audit_row(const std::vector<std::string>& fields) {
    if (fields.size() != kAuditHeader.size()) {
        throw UsageError("expected " + std::to_string(kAuditHeader.size()) + " fields, got " +
                         std::to_string(fields.size()));
    }
    AuditRow row;
    row.task = parse_task(fields[0]);
    row.mu_a = require_number(fields[1], "mu_a");
    row.mu_b = require_number(fields[2], "mu_b");
    const auto n = parse_int(fields[3]);
    if (!n) throw UsageError("column n: not an integer: '" + fields[3] + "'");
    row.n = *n;
    row.spread = require_number(fields[4], "spread_or_congruence");
    row.delta_a = require_number(fields[5], "delta_a");
    row.delta_b = require_number(fields[6], "delta_b");
    row.validate();
    return row;
}

AuditOutcome evaluate_audit_row(const AuditRow& row, const AuditOptions& options,
                                std::uint64_t row_index) {
    if (row.task == Task::Segmentation) {
        seg::SegParams params{row.spread, row.spread, options.seg_congruence, 0.0, 0.0};
        const seg::SegComparison cmp{row.mu_a, row.mu_b, row.n};
        const auto base = seg::seg_false_claim_prob(cmp, params).prob;
        params.delta_a = row.delta_a;
        params.delta_b = row.delta_b;
        return {base, seg::seg_false_claim_prob(cmp, params).prob};
    }
    clf::ClfParams params = options.clf;
    params.congruence_p11 = row.spread;
    params.seed = mix64(options.clf.seed ^ mix64(row_index));
    params.delta_a = 0.0;
    params.delta_b = 0.0;
    const clf::ClfComparison cmp{row.mu_a, row.mu_b, row.n};
    const auto base = clf::clf_false_claim_underspec(cmp, params).prob;
    params.delta_a = row.delta_a;
    params.delta_b = row.delta_b;
    return {base, clf::clf_false_claim_underspec(cmp, params).prob};
}

AuditReport run_audit(std::istream& in, std::ostream& out, const AuditOptions& options) {
    const auto table = read_csv(in);
    if (!table.header.empty()) require_header(table.header, kAuditHeader, "audit CSV");

    auto header = kAuditHeader;
    header.insert(header.end(), kAuditExtra.begin(), kAuditExtra.end());
    out << join_fields(header) << '\n';

    AuditReport report;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& src = table.rows[i];
        auto fields = src.fields;
        ++report.rows;
        try {
            const auto row = parse_audit_row(src.fields);
            const auto outcome = evaluate_audit_row(row, options, i);
            fields.push_back(format_double(outcome.baseline.value()));
            fields.push_back(format_double(outcome.underspec.value()));
            fields.emplace_back(verdict(outcome.underspec.value()));
        } catch (const std::exception& e) {
            report.errors.push_back({src.line, e.what()});
            fields.resize(kAuditHeader.size());
            fields.emplace_back();
            fields.emplace_back();
            fields.emplace_back("INVALID");
        }
        out << join_fields(fields) << '\n';
    }
    return report;
}

}  // namespace falseclaim::io
