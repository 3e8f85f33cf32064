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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Minimal CSV support for the plain numeric files this tool reads and
/// writes: comma separated, no quoting, '.' decimal point.
namespace falseclaim::io {

/// Shortest representation that parses back to the same double.
std::string format_double(double value);

/// Fixed notation with `decimals` digits, for human-facing output.
std::string format_fixed(double value, int decimals);

/// Whole-field parse; nullopt on trailing junk, empty text or non-finite results.
std::optional<double> parse_double(std::string_view text);
std::optional<std::int64_t> parse_int(std::string_view text);

std::vector<std::string> split_fields(std::string_view line);

std::string join_fields(const std::vector<std::string>& fields);

struct CsvRow {
    std::size_t line;  ///< 1-based line number in the source
    std::vector<std::string> fields;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<CsvRow> rows;
};

/// Reads a header plus rows, skipping blank lines and stripping '\r'.
/// An empty stream gives an empty header and no rows.
CsvTable read_csv(std::istream& in);

/// Throws UsageError unless `header` equals `expected`.
void require_header(const std::vector<std::string>& header,
                    const std::vector<std::string>& expected, std::string_view what);

}  // namespace falseclaim::io
