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

#include "falseclaim/io/reference_csv.hpp"

#include <cmath>
#include <string>

#include "falseclaim/io/csv.hpp"

namespace falseclaim::io {

namespace {
const std::vector<std::string> kReferenceHeader = {"n", "delta", "target_prob"};
}

std::vector<calib::ReferencePoint> read_references(std::istream& in) {
    const auto table = read_csv(in);
    require_header(table.header, kReferenceHeader, "reference CSV");
    std::vector<calib::ReferencePoint> refs;
    for (const auto& row : table.rows) {
        const std::string where = "reference CSV line " + std::to_string(row.line) + ": ";
        if (row.fields.size() != kReferenceHeader.size()) {
            throw UsageError(where + "expected 3 fields, got " + std::to_string(row.fields.size()));
        }
        const auto n = parse_int(row.fields[0]);
        const auto delta = parse_double(row.fields[1]);
        const auto target = parse_double(row.fields[2]);
        if (!n || !delta || !target) throw UsageError(where + "unparsable number");
        calib::ReferencePoint ref{*n, *delta, *target};
        try {
            ref.validate();
        } catch (const DomainError& e) {
            throw UsageError(where + e.what());
        }
        refs.push_back(ref);
    }
    return refs;
}

void write_references(std::ostream& out, std::span<const calib::ReferencePoint> refs) {
    out << join_fields(kReferenceHeader) << '\n';
    for (const auto& r : refs) {
        out << r.n << ',' << format_double(r.delta_obs) << ',' << format_double(r.target_prob)
            << '\n';
    }
}

void write_calibration_trace(std::ostream& out, std::span<const calib::CandidateScore> trace) {
    out << "s,sse\n";
    for (const auto& c : trace) {
        out << format_double(c.s) << ',' << (std::isfinite(c.sse) ? format_double(c.sse) : "inf")
            << '\n';
    }
}

}  // namespace falseclaim::io
