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

#ifndef CO2ATTR_STEPWISE_HPP
#define CO2ATTR_STEPWISE_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "co2attr/regress.hpp"

namespace co2attr {

struct SelectionStep {
  Term term;
  std::string label;
  double f_stat = 0.0;
  double p_value = 1.0;
  double ss_sequential = 0.0;  // drop in SS_e when the term entered
};

enum class StopReason { NoCandidateSignificant, CandidateExhaustion, RankGuard };

std::string_view to_string(StopReason r) noexcept;

struct SelectionTrace {
  std::vector<SelectionStep> steps;  // entry order
  double alpha_enter = 0.01;
  FitResult final_fit;
  StopReason stopped_reason = StopReason::NoCandidateSignificant;
  std::vector<std::string> notes;  // skipped candidates and similar events

  std::vector<Term> selected_terms() const;
};

/// Greedy forward selection on top of an intercept-only model. Each step
/// fits every remaining candidate, takes the smallest partial-F p-value
/// (ties: larger F, then earlier candidate), and enters it when
/// p <= alpha_enter. Candidates that make the design rank deficient are
/// skipped with a note. `y` is the regression response, already
/// transformed.
SelectionTrace forward_select(const Dataset& ds, std::span<const double> y,
                              std::span<const Term> candidates, double alpha_enter,
                              FitOptions opts = {});

struct RankingRow {
  int rank = 0;
  std::string label;
  std::string name;
  double coefficient = 0.0;  // from the final fit
  double variation_percent = 0.0;
  int entry_order = 0;  // 1-based step at which the term entered
};

struct RankingTable {
  std::vector<RankingRow> rows;  // variation_percent descending
};

/// Variation share = 100 * sequential SS / SS_total. `long_names`, when
/// given, fills RankingRow::name; otherwise the short label is reused.
RankingTable ranking(const SelectionTrace& trace, std::span<const std::string> long_names = {});

Json to_json(const SelectionTrace& trace);

/// Columns: rank,label,name,coefficient,variation_percent.
std::string to_csv(const RankingTable& table);
std::string to_markdown(const RankingTable& table);

/// Reads the to_csv layout. `rank` and `label` are required; the other
/// columns may be absent or blank. Rows are returned in rank order.
/// Throws ParseError on a malformed or empty file.
RankingTable parse_ranking_csv(std::string_view text);

}  // namespace co2attr

#endif  // CO2ATTR_STEPWISE_HPP
