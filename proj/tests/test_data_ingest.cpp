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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "co2attr/csv.hpp"
#include "co2attr/data_ingest.hpp"
#include "co2attr/error.hpp"
#include "test_support.hpp"

using namespace co2attr;
using co2attr::testing::error_code_of;

namespace {

EmissionsSchema wide_gas_schema() {
  EmissionsSchema s;
  s.factor_columns = {{"gas", "gas"}};
  return s;
}

const std::vector<std::string> kGas{"gas"};

}  // namespace

TEST_SUITE("data_ingest") {

TEST_CASE("csv reader handles quoting and line endings") {
  const auto doc = csv::parse("\xEF\xBB\xBF" "a,b\r\n\"x, y\",\"he said \"\"hi\"\"\"\r\n\n\"multi\nline\",2\n");
  CHECK(doc.header == std::vector<std::string>{"a", "b"});
  REQUIRE(doc.rows.size() == 2);
  CHECK(doc.rows[0][0] == "x, y");
  CHECK(doc.rows[0][1] == "he said \"hi\"");
  CHECK(doc.rows[1][0] == "multi\nline");
  CHECK(doc.line_of[1] == 4);
  CHECK(error_code_of([] { csv::parse("a\n\"open"); }) == ErrorCode::ParseError);
}

TEST_CASE("parse_emissions_csv wide format") {
  const auto t = parse_emissions_csv("country,year,gas\nDEU,2008,85457\n", wide_gas_schema());
  REQUIRE(t.size() == 1);
  CHECK(t.records()[0].country == "DEU");
  CHECK(t.records()[0].year == 2008);
  CHECK(t.records()[0].value == 85457.0);

  CHECK(parse_emissions_csv("country,year,gas\n", wide_gas_schema()).empty());
}

TEST_CASE("parse_emissions_csv errors") {
  CHECK(error_code_of([] {
          parse_emissions_csv("country,year,gas\nDEU,2008,1\nDEU,2008,2\n", wide_gas_schema());
        }) == ErrorCode::DuplicateRecord);
  CHECK(error_code_of([] {
          parse_emissions_csv("country,year,oil\nDEU,2008,1\n", wide_gas_schema());
        }) == ErrorCode::SchemaError);
  try {
    parse_emissions_csv("country,year,gas\nDEU,2008,1\nFRA,2008,n/a\n", wide_gas_schema());
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("'gas'") != std::string::npos);
  }
  CHECK(error_code_of([] {
          parse_emissions_csv("country,year,gas\nDEU,2008,-4\n", wide_gas_schema());
        }) == ErrorCode::DomainError);
}

TEST_CASE("blank cells are absent, not zero") {
  EmissionsSchema s;
  s.factor_columns = {{"gas", "gas"}, {"oil", "oil"}};
  const auto t = parse_emissions_csv("country,year,gas,oil\nMLT,1960,,7\nMLT,1961,0,8\n", s);
  CHECK(t.size() == 3);
  CHECK_FALSE(t.find("MLT", 1960, "gas").has_value());
  CHECK(t.find("MLT", 1961, "gas") == 0.0);
}

TEST_CASE("long format and melt round trip") {
  const auto t = parse_emissions_csv(
      "country,year,factor,value\nA,2000,gas,1\nA,2000,oil,2\nB,2000,gas,3\nB,2000,oil,4\n",
      EmissionsSchema::long_format());
  CHECK(t.size() == 4);

  EmissionsSchema wide;
  wide.factor_columns = {{"gas", "gas"}, {"oil", "oil"}};
  const std::string csv_text = to_wide_csv(t, wide);
  const auto back = parse_emissions_csv(csv_text, wide);
  REQUIRE(back.size() == t.size());
  for (const auto& r : t.records()) CHECK(back.find(r.country, r.year, r.factor) == r.value);
  // A complete panel survives a second melt byte for byte.
  CHECK(to_wide_csv(back, wide) == csv_text);
}

TEST_CASE("melt round trip on random complete panels") {
  co2attr::testing::Rng rng(7);
  EmissionsSchema wide;
  wide.factor_columns = {{"f1", "f1"}, {"f2", "f2"}, {"f3", "f3"}};
  for (int trial = 0; trial < 20; ++trial) {
    EmissionsTable t;
    for (int c = 0; c < 4; ++c) {
      for (int y = 1990; y < 1995; ++y) {
        for (const auto& [key, header] : wide.factor_columns) {
          t.add({"C" + std::to_string(c), y, key, std::floor(rng.uniform(0, 1e5)) / 7.0});
        }
      }
    }
    const auto back = parse_emissions_csv(to_wide_csv(t, wide), wide);
    REQUIRE(back.size() == t.size());
    for (const auto& r : t.records()) CHECK(back.find(r.country, r.year, r.factor) == r.value);
  }
}

TEST_CASE("parse_response_csv") {
  const auto s = parse_response_csv("year,co2_ppmv\n1959,315.97\n");
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].year == 1959);
  CHECK(s.points[0].co2 == 315.97);

  const auto sorted = parse_response_csv("year,co2_ppmv,unc\n1961,3,0.1\n1960,2,0.1\n");
  CHECK(sorted.points[0].year == 1960);
  CHECK(sorted.points[1].year == 1961);

  CHECK(error_code_of([] { parse_response_csv("year,co2_ppmv\n1959,-1\n"); }) ==
        ErrorCode::DomainError);
  CHECK(error_code_of([] { parse_response_csv("year,co2_ppmv\n1959,1\n1959,2\n"); }) ==
        ErrorCode::DuplicateRecord);
}

TEST_CASE("bundled Mauna Loa fixture round trips") {
  const auto s = parse_response_csv(co2attr::testing::read_text(
      co2attr::testing::data_path("mauna_loa_annual.csv")));
  REQUIRE(s.points.size() == 50);
  CHECK(s.points.front().year == 1959);
  CHECK(s.points.front().co2 == 315.97);
  CHECK(s.points.back().year == 2008);
}

TEST_CASE("aggregate_region") {
  const auto t = parse_emissions_csv(
      "country,year,gas\nA,2000,1\nA,2001,2\nB,2000,10\n", wide_gas_schema());

  const std::vector<std::string> only_a{"A"};
  const auto a = aggregate_region(t, only_a, kGas, {});
  CHECK(a.series[0].values == std::vector<double>{1, 2});

  const auto both = aggregate_region(t, {}, kGas, {});
  CHECK(both.years == std::vector<int>{2000, 2001});
  CHECK(both.series[0].values == std::vector<double>{11, 2});
  CHECK(both.series[0].missing == std::vector<int>{0, 1});

  const std::vector<std::string> cement{"cement"};
  CHECK(error_code_of([&] { aggregate_region(t, {}, cement, {}); }) == ErrorCode::UnknownFactor);
}

TEST_CASE("aggregate_region is additive over disjoint country sets") {
  co2attr::testing::Rng rng(11);
  EmissionsTable t;
  for (int c = 0; c < 6; ++c) {
    for (int y = 2000; y < 2010; ++y) {
      if (rng.uniform() < 0.8) t.add({"C" + std::to_string(c), y, "gas", rng.uniform(0, 1000)});
    }
  }
  const std::vector<std::string> a{"C0", "C2", "C4"}, b{"C1", "C3"}, ab{"C0", "C1", "C2", "C3", "C4"};
  const std::vector<int> years{2000, 2001, 2002, 2003, 2004, 2005, 2006, 2007, 2008, 2009};
  const auto sa = aggregate_region(t, a, kGas, years).series[0];
  const auto sb = aggregate_region(t, b, kGas, years).series[0];
  const auto sab = aggregate_region(t, ab, kGas, years).series[0];
  for (std::size_t y = 0; y < years.size(); ++y) {
    CHECK(sab.values[y] == doctest::Approx(sa.values[y] + sb.values[y]).epsilon(1e-14));
    CHECK(sab.missing[y] == sa.missing[y] + sb.missing[y]);
  }
}

TEST_CASE("2008 gas fixture totals sum to 314326") {
  const auto t = parse_emissions_csv(
      co2attr::testing::read_text(co2attr::testing::data_path("eu_gas_2008.csv")),
      EmissionsSchema::long_format());
  // Hand addition of the 23 published country totals.
  const double hand_sum = 85457 + 58395 + 37306 + 21021 + 16855 + 14669 + 13383 + 9805 + 8946 +
                          8058 + 7346 + 5478 + 4361 + 4205 + 4062 + 3896 + 3275 + 2644 + 2530 +
                          2519 + 86 + 29 + 0;
  CHECK(hand_sum == 314326.0);
  const std::vector<int> y2008{2008};
  const auto agg = aggregate_region(t, {}, kGas, y2008);
  CHECK(agg.countries.size() == 23);
  CHECK(agg.series[0].values[0] == 314326.0);
}

TEST_CASE("join_dataset") {
  RegionAggregate pred;
  ResponseSeries resp;
  for (int y = 1959; y <= 2008; ++y) {
    pred.years.push_back(y);
    resp.points.push_back({y, 300.0 + y - 1959});
  }
  pred.series.push_back({"Ga", std::vector<double>(pred.years.size(), 1.0), {}});

  const std::vector<int> ex{1964};
  const auto ds = join_dataset(pred, resp, ex);
  CHECK(ds.n() == 49);
  CHECK(std::find(ds.years.begin(), ds.years.end(), 1964) == ds.years.end());
  CHECK(ds.excluded_years == ex);
  CHECK(std::is_sorted(ds.years.begin(), ds.years.end()));

  RegionAggregate small{{1, 2, 3}, {}, {{"x", {1, 2, 3}, {}}}};
  ResponseSeries small_resp{{{1, 1.0}, {2, 2.0}, {3, 3.0}}};
  CHECK(join_dataset(small, small_resp, {}).n() == 3);

  ResponseSeries disjoint{{{10, 1.0}, {11, 2.0}}};
  CHECK(error_code_of([&] { join_dataset(small, disjoint, {}); }) == ErrorCode::EmptyJoin);
}

TEST_CASE("join_dataset years are the exact intersection minus exclusions") {
  co2attr::testing::Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    std::set<int> py, ry, ex;
    for (int y = 0; y < 40; ++y) {
      if (rng.uniform() < 0.7) py.insert(y);
      if (rng.uniform() < 0.7) ry.insert(y);
      if (rng.uniform() < 0.1) ex.insert(y);
    }
    RegionAggregate pred;
    pred.years.assign(py.begin(), py.end());
    pred.series.push_back({"x", std::vector<double>(py.size(), 1.0), {}});
    ResponseSeries resp;
    for (int y : ry) resp.points.push_back({y, 1.0});
    const std::vector<int> exv(ex.begin(), ex.end());

    std::vector<int> expected;
    for (int y : py) {
      if (ry.count(y) && !ex.count(y)) expected.push_back(y);
    }
    if (expected.size() < 2) continue;
    CHECK(join_dataset(pred, resp, exv).years == expected);
  }
}

TEST_CASE("country_contributions on the 2008 gas fixture") {
  const auto t = parse_emissions_csv(
      co2attr::testing::read_text(co2attr::testing::data_path("eu_gas_2008.csv")),
      EmissionsSchema::long_format());
  const auto table = country_contributions(t, "gas", 2008, {});
  REQUIRE(table.rows.size() == 23);
  CHECK(table.rows[0].country == "GERMANY");
  CHECK(table.rows[0].rank == 1);
  CHECK(table.rows[0].total == 85457.0);
  CHECK(csv::format_fixed2(table.rows[0].percent) == "27.19");
  CHECK(table.rows.back().country == "MALTA");
  CHECK(table.rows.back().total == 0.0);
  CHECK(csv::format_fixed2(table.rows.back().percent) == "0.00");

  double sum = 0.0, rounded = 0.0;
  for (const auto& r : table.rows) {
    sum += r.percent;
    rounded += std::stod(csv::format_fixed2(r.percent));
  }
  CHECK(sum == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(std::abs(rounded - 100.0) <= 0.05);

  const std::string text = to_csv(table);
  CHECK(text.rfind("rank,country,total,percent\n1,GERMANY,85457,27.19\n", 0) == 0);
  const auto j = to_json(table);
  CHECK(j["factor"] == "gas");
  CHECK(j["rows"][0]["country"] == "GERMANY");
}

TEST_CASE("country_contributions edge cases") {
  const auto one = parse_emissions_csv("country,year,gas\nX,2008,5\n", wide_gas_schema());
  const auto table = country_contributions(one, "gas", 2008, {});
  REQUIRE(table.rows.size() == 1);
  CHECK(csv::format_fixed2(table.rows[0].percent) == "100.00");

  const auto zeros = parse_emissions_csv("country,year,gas\nX,2008,0\nY,2008,0\n", wide_gas_schema());
  CHECK(error_code_of([&] { country_contributions(zeros, "gas", 2008, {}); }) ==
        ErrorCode::DegenerateTotal);
}

TEST_CASE("contribution percents sum to 100 within 0.05") {
  co2attr::testing::Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    EmissionsTable t;
    const int countries = rng.integer(1, 30);
    for (int c = 0; c < countries; ++c) {
      t.add({"C" + std::to_string(c), 2008, "gas", std::floor(rng.uniform(0, 1e5))});
    }
    t.add({"Z", 2008, "gas", 1.0});
    const auto table = country_contributions(t, "gas", 2008, {});
    double sum = 0.0;
    for (const auto& r : table.rows) sum += r.percent;
    CHECK(std::abs(sum - 100.0) <= 0.05);
    CHECK(std::is_sorted(table.rows.begin(), table.rows.end(),
                         [](const auto& a, const auto& b) { return a.total > b.total; }));
  }
}

}  // TEST_SUITE
