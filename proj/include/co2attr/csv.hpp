// Copyright 2026 The co2attr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CO2ATTR_CSV_HPP
#define CO2ATTR_CSV_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace co2attr::csv {

/// A parsed CSV document. `rows` excludes the header line; `line_of[i]` is
/// the 1-based physical line on which row i starts.
struct Document {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_of;

  /// Index of a header column, or nullopt. Comparison ignores surrounding
  /// whitespace and case.
  std::optional<std::size_t> column(std::string_view name) const;
};

/// RFC-4180 reader: quoted fields, doubled quotes, embedded newlines, CRLF.
/// A leading UTF-8 BOM is skipped. Blank lines are ignored. Throws
/// Error{ParseError} on an unterminated quote or an empty document.
Document parse(std::string_view text);

std::string quote(std::string_view field);

/// Join fields into one CSV line (no trailing newline).
std::string join(const std::vector<std::string>& fields);

/// 17 significant digits, `%.17g`; round-trips every double exactly.
std::string format_real(double value);

/// Fixed two-decimal rendering used for percentages.
std::string format_fixed2(double value);

std::string trim(std::string_view s);

}  // namespace co2attr::csv

#endif  // CO2ATTR_CSV_HPP
