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

// Pipeline orchestration behind the `co2attr` command-line tool. Each
// command computes every output in memory first (`run_*`), then writes the
// files (`cmd_*`), so tests can inspect outputs without touching disk.

#ifndef CO2ATTR_CLI_HPP
#define CO2ATTR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "co2attr/data_ingest.hpp"
#include "co2attr/json.hpp"
#include "co2attr/stepwise.hpp"
#include "co2attr/validate.hpp"

namespace co2attr::cli {

struct FactorSpec {
  std::string key;        // logical factor key, e.g. "gas"
  std::string header;     // wide-format column header
  std::string label;      // short label used in term labels, e.g. "Ga"
  std::string long_name;  // e.g. "Gas"
};

/// Built-in CDIAC fuel categories; unknown keys map to themselves.
FactorSpec factor_spec(const std::string& key);

struct RunConfig {
  std::string emissions_path;
  std::string response_path;
  std::vector<std::string> factors{"liquid", "gas", "flares", "bunker"};
  std::vector<std::string> countries;  // empty: every country in the file
  std::vector<int> excluded_years{1964};
  double lambda = -2.376;
  double alpha_enter = 0.01;
  double normality_alpha = 0.05;
  int k_folds = 0;  // 0: leave-one-out
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  std::string config_path;

  // validate
  std::vector<std::string> terms;
  std::string model_path;
  // contrib
  std::string factor = "gas";
  int year = 2008;
  // compare
  std::string ranking_a;
  std::string ranking_b;
  std::vector<std::string> compare_headers{"A", "B"};
};

Json to_json(const RunConfig& cfg);

/// Output file name -> content, written after all computation finishes.
using OutputFiles = std::map<std::string, std::string>;

struct CommandResult {
  OutputFiles files;
  std::vector<std::string> warnings;
};

std::string read_file(const std::string& path);  // throws FileNotFound

EmissionsTable load_emissions(const std::string& path, const std::vector<std::string>& factors);
Dataset load_dataset(const RunConfig& cfg);

CommandResult run_fit(const RunConfig& cfg);
CommandResult run_validate(const RunConfig& cfg);
CommandResult run_contrib(const RunConfig& cfg);
CommandResult run_compare(const RunConfig& cfg);
CommandResult run_ingest_check(const RunConfig& cfg);

struct ComparisonRow {
  int rank = 0;
  std::string label_a;
  std::string label_b;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

/// Side by side by rank, padding the shorter list with blanks.
ComparisonTable compare_rankings(const RankingTable& a, const RankingTable& b);
std::string to_csv(const ComparisonTable& t, const std::vector<std::string>& headers);
std::string to_markdown(const ComparisonTable& t, const std::vector<std::string>& headers);

/// Lower-case hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Runs one subcommand: computes, writes outputs plus run-manifest.json into
/// cfg.out_dir, and reports errors as a JSON object on `err`. Returns the
/// process exit status.
int execute(const std::string& command, const RunConfig& cfg, std::ostream& out,
            std::ostream& err);

}  // namespace co2attr::cli

#endif  // CO2ATTR_CLI_HPP
