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

#include "co2attr/data_ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "co2attr/csv.hpp"
#include "co2attr/error.hpp"

namespace co2attr {

namespace {

constexpr const char* kModule = "data_ingest";

[[noreturn]] void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, kModule, msg);
}

std::string where(const csv::Document& doc, std::size_t row, std::string_view column) {
  return "line " + std::to_string(doc.line_of[row]) + ", column '" + std::string(column) + "'";
}

std::size_t require_column(const csv::Document& doc, std::string_view name) {
  auto idx = doc.column(name);
  if (!idx) fail(ErrorCode::SchemaError, "missing header column '" + std::string(name) + "'");
  return *idx;
}

const std::string& cell(const csv::Document& doc, std::size_t row, std::size_t col) {
  static const std::string empty;
  const auto& r = doc.rows[row];
  return col < r.size() ? r[col] : empty;
}

std::optional<double> parse_real(const std::string& raw, const csv::Document& doc,
                                 std::size_t row, std::string_view column) {
  const std::string s = csv::trim(raw);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    fail(ErrorCode::ParseError, "non-numeric value '" + s + "' at " + where(doc, row, column));
  }
  return v;
}

int parse_year(const std::string& raw, const csv::Document& doc, std::size_t row,
               std::string_view column) {
  const std::string s = csv::trim(raw);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorCode::ParseError, "invalid year '" + s + "' at " + where(doc, row, column));
  }
  return v;
}

}  // namespace

// --- EmissionsTable ---------------------------------------------------------

void EmissionsTable::add(EmissionRecord record) {
  if (!std::isfinite(record.value) || record.value < 0.0) {
    fail(ErrorCode::DomainError, "emission value for (" + record.country + ", " +
                                     std::to_string(record.year) + ", " + record.factor +
                                     ") must be finite and non-negative");
  }
  Key key{record.country, record.year, record.factor};
  if (index_.count(key)) {
    fail(ErrorCode::DuplicateRecord, "duplicate record (" + record.country + ", " +
                                         std::to_string(record.year) + ", " + record.factor +
                                         ")");
  }
  index_.emplace(std::move(key), records_.size());
  records_.push_back(std::move(record));
}

std::optional<double> EmissionsTable::find(std::string_view country, int year,
                                           std::string_view factor) const {
  auto it = index_.find(std::make_tuple(country, year, factor));
  if (it == index_.end()) return std::nullopt;
  return records_[it->second].value;
}

bool EmissionsTable::has_factor(std::string_view factor) const {
  return std::any_of(records_.begin(), records_.end(),
                     [&](const EmissionRecord& r) { return r.factor == factor; });
}

std::vector<std::string> EmissionsTable::countries() const {
  std::set<std::string> s;
  for (const auto& r : records_) s.insert(r.country);
  return {s.begin(), s.end()};
}

std::vector<std::string> EmissionsTable::factors() const {
  std::set<std::string> s;
  for (const auto& r : records_) s.insert(r.factor);
  return {s.begin(), s.end()};
}

std::vector<int> EmissionsTable::years() const {
  std::set<int> s;
  for (const auto& r : records_) s.insert(r.year);
  return {s.begin(), s.end()};
}

// --- parsing ----------------------------------------------------------------

EmissionsSchema EmissionsSchema::long_format() {
  EmissionsSchema s;
  s.factor_column = "factor";
  s.value_column = "value";
  return s;
}

EmissionsTable parse_emissions_csv(std::string_view text, const EmissionsSchema& schema) {
  const csv::Document doc = csv::parse(text);
  const std::size_t country_col = require_column(doc, schema.country_column);
  const std::size_t year_col = require_column(doc, schema.year_column);

  EmissionsTable table;
  if (schema.is_long()) {
    const std::size_t factor_col = require_column(doc, schema.factor_column);
    const std::size_t value_col = require_column(doc, schema.value_column);
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
      auto value = parse_real(cell(doc, r, value_col), doc, r, schema.value_column);
      if (!value) continue;
      const std::string country = csv::trim(cell(doc, r, country_col));
      const std::string factor = csv::trim(cell(doc, r, factor_col));
      if (country.empty() || factor.empty()) {
        fail(ErrorCode::ParseError, "blank key cell at line " + std::to_string(doc.line_of[r]));
      }
      table.add({country, parse_year(cell(doc, r, year_col), doc, r, schema.year_column), factor,
                 *value});
    }
    return table;
  }

  if (schema.factor_columns.empty()) {
    fail(ErrorCode::SchemaError, "wide schema maps no factor columns");
  }
  std::vector<std::size_t> cols;
  for (const auto& [factor, header] : schema.factor_columns) {
    cols.push_back(require_column(doc, header));
  }
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    const std::string country = csv::trim(cell(doc, r, country_col));
    if (country.empty()) {
      fail(ErrorCode::ParseError, "blank country at line " + std::to_string(doc.line_of[r]));
    }
    const int year = parse_year(cell(doc, r, year_col), doc, r, schema.year_column);
    for (std::size_t f = 0; f < cols.size(); ++f) {
      const auto& [factor, header] = schema.factor_columns[f];
      if (auto value = parse_real(cell(doc, r, cols[f]), doc, r, header)) {
        table.add({country, year, factor, *value});
      }
    }
  }
  return table;
}

std::string to_wide_csv(const EmissionsTable& table, const EmissionsSchema& schema) {
  std::vector<std::string> header{schema.country_column, schema.year_column};
  for (const auto& [factor, name] : schema.factor_columns) header.push_back(name);
  std::string out = csv::join(header) + "\n";

  std::set<std::pair<std::string, int>> keys;
  for (const auto& r : table.records()) keys.emplace(r.country, r.year);
  for (const auto& [country, year] : keys) {
    std::vector<std::string> fields{country, std::to_string(year)};
    for (const auto& [factor, name] : schema.factor_columns) {
      auto v = table.find(country, year, factor);
      fields.push_back(v ? csv::format_real(*v) : std::string());
    }
    out += csv::join(fields) + "\n";
  }
  return out;
}

ResponseSeries parse_response_csv(std::string_view text) {
  const csv::Document doc = csv::parse(text);
  const std::size_t year_col = require_column(doc, "year");
  const std::size_t co2_col = require_column(doc, "co2_ppmv");

  ResponseSeries series;
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    const int year = parse_year(cell(doc, r, year_col), doc, r, "year");
    auto co2 = parse_real(cell(doc, r, co2_col), doc, r, "co2_ppmv");
    if (!co2) fail(ErrorCode::ParseError, "missing co2 value at " + where(doc, r, "co2_ppmv"));
    if (*co2 <= 0.0) {
      fail(ErrorCode::DomainError,
           "co2 must be positive, got " + csv::format_real(*co2) + " for year " +
               std::to_string(year));
    }
    series.points.push_back({year, *co2});
  }
  std::sort(series.points.begin(), series.points.end(),
            [](const ResponsePoint& a, const ResponsePoint& b) { return a.year < b.year; });
  for (std::size_t i = 1; i < series.points.size(); ++i) {
    if (series.points[i].year == series.points[i - 1].year) {
      fail(ErrorCode::DuplicateRecord,
           "duplicate response year " + std::to_string(series.points[i].year));
    }
  }
  return series;
}

// --- aggregation and join ---------------------------------------------------

RegionAggregate aggregate_region(const EmissionsTable& em, std::span<const std::string> countries,
                                 std::span<const std::string> factors,
                                 std::span<const int> years) {
  RegionAggregate agg;
  agg.countries = countries.empty() ? em.countries()
                                    : std::vector<std::string>(countries.begin(), countries.end());
  if (years.empty()) {
    agg.years = em.years();
  } else {
    std::set<int> ys(years.begin(), years.end());
    agg.years.assign(ys.begin(), ys.end());
  }

  for (const auto& factor : factors) {
    if (!em.has_factor(factor)) {
      fail(ErrorCode::UnknownFactor, "factor '" + factor + "' has no records");
    }
    FactorSeries s{factor, std::vector<double>(agg.years.size(), 0.0),
                   std::vector<int>(agg.years.size(), 0)};
    for (std::size_t y = 0; y < agg.years.size(); ++y) {
      for (const auto& country : agg.countries) {
        if (auto v = em.find(country, agg.years[y], factor)) {
          s.values[y] += *v;
        } else {
          ++s.missing[y];
        }
      }
    }
    agg.series.push_back(std::move(s));
  }
  return agg;
}

std::vector<std::string> Dataset::predictor_names() const {
  std::vector<std::string> names;
  names.reserve(predictors.size());
  for (const auto& p : predictors) names.push_back(p.name);
  return names;
}

Dataset join_dataset(const RegionAggregate& predictors, const ResponseSeries& response,
                     std::span<const int> exclude) {
  {
    std::set<std::string> seen;
    for (const auto& s : predictors.series) {
      if (!seen.insert(s.factor).second) {
        fail(ErrorCode::DuplicateRecord, "predictor '" + s.factor + "' appears twice");
      }
    }
  }
  const std::set<int> excluded(exclude.begin(), exclude.end());

  Dataset ds;
  ds.region = predictors.countries;
  ds.excluded_years.assign(excluded.begin(), excluded.end());
  for (const auto& s : predictors.series) ds.predictors.push_back({s.factor, {}});

  // Both sides are sorted ascending by year.
  std::size_t r = 0;
  for (std::size_t p = 0; p < predictors.years.size(); ++p) {
    const int year = predictors.years[p];
    while (r < response.points.size() && response.points[r].year < year) ++r;
    if (r == response.points.size()) break;
    if (response.points[r].year != year || excluded.count(year)) continue;
    ds.years.push_back(year);
    ds.response.push_back(response.points[r].co2);
    for (std::size_t f = 0; f < predictors.series.size(); ++f) {
      ds.predictors[f].values.push_back(predictors.series[f].values[p]);
    }
  }
  if (ds.n() < 2) {
    fail(ErrorCode::EmptyJoin, "year join leaves " + std::to_string(ds.n()) +
                                   " observations; at least 2 are required");
  }
  return ds;
}

// --- contributions ----------------------------------------------------------

ContributionTable country_contributions(const EmissionsTable& em, std::string_view factor, int year,
                                        std::span<const std::string> countries) {
  const std::vector<std::string> who =
      countries.empty() ? em.countries()
                        : std::vector<std::string>(countries.begin(), countries.end());
  ContributionTable table;
  table.factor = std::string(factor);
  table.year = year;

  double grand = 0.0;
  for (const auto& c : who) {
    const double v = em.find(c, year, factor).value_or(0.0);
    table.rows.push_back({0, c, v, 0.0});
    grand += v;
  }
  if (!(grand > 0.0)) {
    fail(ErrorCode::DegenerateTotal, "total for factor '" + table.factor + "' in " +
                                         std::to_string(year) + " is zero");
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const ContributionRow& a, const ContributionRow& b) {
                     if (a.total != b.total) return a.total > b.total;
                     return a.country < b.country;
                   });
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    table.rows[i].rank = static_cast<int>(i + 1);
    table.rows[i].percent = 100.0 * table.rows[i].total / grand;
  }
  return table;
}

std::string to_csv(const ContributionTable& table) {
  std::string out = "rank,country,total,percent\n";
  for (const auto& r : table.rows) {
    out += csv::join({std::to_string(r.rank), r.country, csv::format_real(r.total),
                      csv::format_fixed2(r.percent)}) +
           "\n";
  }
  return out;
}

Json to_json(const ContributionTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"rank", r.rank},
                    {"country", r.country},
                    {"total", r.total},
                    {"percent", r.percent}});
  }
  return Json{{"factor", table.factor}, {"year", table.year}, {"rows", std::move(rows)}};
}

}  // namespace co2attr
