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

// Ingestion of national emissions panels and the atmospheric CO2 series,
// regional aggregation, and the year join that produces a regression-ready
// Dataset.

#ifndef CO2ATTR_DATA_INGEST_HPP
#define CO2ATTR_DATA_INGEST_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "co2attr/json.hpp"

namespace co2attr {

/// One (country, year, factor) emission value, thousand metric tons of carbon.
struct EmissionRecord {
  std::string country;
  int year = 0;
  std::string factor;
  double value = 0.0;
};

/// Long-form emissions panel. Keys are unique and values finite and >= 0;
/// `add` enforces both.
class EmissionsTable {
 public:
  void add(EmissionRecord record);

  const std::vector<EmissionRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  std::optional<double> find(std::string_view country, int year,
                             std::string_view factor) const;
  bool has_factor(std::string_view factor) const;

  // Sorted, de-duplicated.
  std::vector<std::string> countries() const;
  std::vector<std::string> factors() const;
  std::vector<int> years() const;

 private:
  using Key = std::tuple<std::string, int, std::string>;
  std::vector<EmissionRecord> records_;
  std::map<Key, std::size_t, std::less<>> index_;
};

/// Maps logical columns onto header names. Long format is selected when
/// both `factor_column` and `value_column` are non-empty; otherwise
/// `factor_columns` lists (factor key, header) pairs of a wide file.
struct EmissionsSchema {
  std::string country_column = "country";
  std::string year_column = "year";
  std::string factor_column;
  std::string value_column;
  std::vector<std::pair<std::string, std::string>> factor_columns;

  bool is_long() const noexcept { return !factor_column.empty() && !value_column.empty(); }

  static EmissionsSchema long_format();
};

EmissionsTable parse_emissions_csv(std::string_view text, const EmissionsSchema& schema);

/// Inverse of the wide-format melt. Absent records become blank cells.
std::string to_wide_csv(const EmissionsTable& table, const EmissionsSchema& schema);

struct ResponsePoint {
  int year = 0;
  double co2 = 0.0;  // ppmv
};

struct ResponseSeries {
  std::vector<ResponsePoint> points;  // strictly increasing years
};

/// Reads `year,co2_ppmv`; extra columns are ignored.
ResponseSeries parse_response_csv(std::string_view text);

struct FactorSeries {
  std::string factor;
  std::vector<double> values;  // aligned with RegionAggregate::years
  std::vector<int> missing;    // countries without a record for that year
};

struct RegionAggregate {
  std::vector<int> years;
  std::vector<std::string> countries;
  std::vector<FactorSeries> series;
};

/// Sums each factor over `countries` for every requested year. Missing
/// records contribute 0 and are counted in FactorSeries::missing. Empty
/// `countries` or `years` means every country or year present in `em`.
RegionAggregate aggregate_region(const EmissionsTable& em, std::span<const std::string> countries,
                                 std::span<const std::string> factors,
                                 std::span<const int> years);

struct Predictor {
  std::string name;
  std::vector<double> values;
};

struct Dataset {
  std::vector<int> years;
  std::vector<double> response;  // ppmv
  std::vector<Predictor> predictors;
  std::vector<std::string> region;
  std::vector<int> excluded_years;

  std::size_t n() const noexcept { return years.size(); }
  std::size_t k() const noexcept { return predictors.size(); }
  std::vector<std::string> predictor_names() const;
};

/// Restricts to (predictor years ∩ response years) \ exclude, ascending.
Dataset join_dataset(const RegionAggregate& predictors, const ResponseSeries& response,
                     std::span<const int> exclude);

struct ContributionRow {
  int rank = 0;
  std::string country;
  double total = 0.0;
  double percent = 0.0;  // full precision; rendered with two decimals
};

struct ContributionTable {
  std::string factor;
  int year = 0;
  std::vector<ContributionRow> rows;
};

/// Ranks countries by their share of the regional total for one factor and
/// year. Countries without a record are listed with total 0. Empty
/// `countries` means every country in `em`.
ContributionTable country_contributions(const EmissionsTable& em, std::string_view factor, int year,
                                        std::span<const std::string> countries);

std::string to_csv(const ContributionTable& table);
Json to_json(const ContributionTable& table);

}  // namespace co2attr

#endif  // CO2ATTR_DATA_INGEST_HPP
