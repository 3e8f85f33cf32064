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

#include "falseclaim/io/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "falseclaim/error.hpp"

namespace falseclaim::io {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    return text;
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

std::string format_fixed(double value, int decimals) {
    std::array<char, 64> buf{};
    const int len = std::snprintf(buf.data(), buf.size(), "%.*f", decimals, value);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::optional<double> parse_double(std::string_view text) {
    text = trim(text);
    if (text.empty()) return std::nullopt;
    if (text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::optional<std::int64_t> parse_int(std::string_view text) {
    text = trim(text);
    if (text.empty()) return std::nullopt;
    if (text.front() == '+') text.remove_prefix(1);
    std::int64_t value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        const auto piece = line.substr(start, comma == std::string_view::npos ? line.npos
                                                                              : comma - start);
        out.emplace_back(trim(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string join_fields(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += fields[i];
    }
    return out;
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    std::size_t number = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++number;
        if (trim(line).empty()) continue;
        auto fields = split_fields(line);
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
        } else {
            table.rows.push_back({number, std::move(fields)});
        }
    }
    return table;
}

void require_header(const std::vector<std::string>& header,
                    const std::vector<std::string>& expected, std::string_view what) {
    if (header != expected) {
        throw UsageError(std::string(what) + ": expected header '" + join_fields(expected) +
                         "', got '" + join_fields(header) + "'");
    }
}

}  // namespace falseclaim::io
