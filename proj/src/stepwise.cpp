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

#include "co2attr/stepwise.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "co2attr/csv.hpp"
#include "co2attr/error.hpp"

namespace co2attr {

namespace {

constexpr const char* kModule = "stepwise";

struct Candidate {
  std::size_t index = 0;
  FitResult fit;
  double f_stat = 0.0;
  double p_value = 1.0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.p_value != b.p_value) return a.p_value < b.p_value;
  if (a.f_stat != b.f_stat) return a.f_stat > b.f_stat;
  return a.index < b.index;
}

FitResult fit_terms(const Dataset& ds, std::span<const double> y, const std::vector<Term>& terms,
                    const FitOptions& opts) {
  return fit_ols(build_design_matrix(ds, terms, true), y, opts);
}

}  // namespace

std::string_view to_string(StopReason r) noexcept {
  switch (r) {
    case StopReason::NoCandidateSignificant:
      return "no-candidate-significant";
    case StopReason::CandidateExhaustion:
      return "candidate-exhaustion";
    case StopReason::RankGuard:
      return "rank-guard";
  }
  return "unknown";
}

std::vector<Term> SelectionTrace::selected_terms() const {
  std::vector<Term> out;
  for (const auto& s : steps) out.push_back(s.term);
  return out;
}

SelectionTrace forward_select(const Dataset& ds, std::span<const double> y,
                              std::span<const Term> candidates, double alpha_enter,
                              FitOptions opts) {
  if (candidates.empty()) {
    throw Error(ErrorCode::NoUsableCandidates, kModule, "no candidate terms supplied");
  }
  if (ds.n() <= 2) {
    throw Error(ErrorCode::Underdetermined, kModule, "forward selection needs n > 2");
  }
  const auto names = ds.predictor_names();

  SelectionTrace trace;
  trace.alpha_enter = alpha_enter;
  std::vector<Term> current;
  std::vector<bool> entered(candidates.size(), false);
  FitResult current_fit = fit_terms(ds, y, current, opts);

  while (true) {
    if (std::find(entered.begin(), entered.end(), false) == entered.end()) {
      trace.stopped_reason = StopReason::CandidateExhaustion;
      break;
    }
    if (is_exact_fit(current_fit)) {
      trace.notes.push_back("current model fits exactly; no further entry is testable");
      trace.stopped_reason = StopReason::NoCandidateSignificant;
      break;
    }

    std::optional<Candidate> best;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (entered[c]) continue;
      std::vector<Term> trial = current;
      trial.push_back(candidates[c]);
      Candidate cand{c, {}, 0.0, 1.0};
      try {
        // The intercept plus the trial terms must leave an error degree of freedom.
        if (trial.size() + 1 >= ds.n()) {
          throw Error(ErrorCode::Underdetermined, kModule, "no error degrees of freedom left");
        }
        cand.fit = fit_terms(ds, y, trial, opts);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RankDeficient && e.code() != ErrorCode::Underdetermined) throw;
        trace.notes.push_back("step " + std::to_string(trace.steps.size() + 1) + ": skipped " +
                              term_label(candidates[c], names) + " (" +
                              std::string(to_string(e.code())) + ")");
        continue;
      }
      if (is_exact_fit(cand.fit)) {
        cand.f_stat = std::numeric_limits<double>::infinity();
        cand.p_value = 0.0;
      } else {
        const FTest t = partial_f_test(cand.fit, current_fit);
        cand.f_stat = t.f_stat;
        cand.p_value = t.p_value;
      }
      if (!best || better(cand, *best)) best = std::move(cand);
    }

    if (!best) {
      if (trace.steps.empty()) {
        throw Error(ErrorCode::NoUsableCandidates, kModule,
                    "every candidate makes the initial design rank deficient");
      }
      trace.stopped_reason = StopReason::RankGuard;
      break;
    }
    // alpha_enter == 0 admits nothing, even p-values that underflow to 0.
    if (!(alpha_enter > 0.0 && best->p_value <= alpha_enter)) {
      trace.stopped_reason = StopReason::NoCandidateSignificant;
      break;
    }

    const Term& term = candidates[best->index];
    SelectionStep step;
    step.term = term;
    step.label = term_label(term, names);
    step.f_stat = best->f_stat;
    step.p_value = best->p_value;
    step.ss_sequential = std::max(0.0, current_fit.ss_error - best->fit.ss_error);
    trace.steps.push_back(std::move(step));

    entered[best->index] = true;
    current.push_back(term);
    current_fit = std::move(best->fit);
  }

  trace.final_fit = std::move(current_fit);
  return trace;
}

RankingTable ranking(const SelectionTrace& trace, std::span<const std::string> long_names) {
  if (trace.steps.empty()) {
    throw Error(ErrorCode::EmptySelection, kModule, "ranking needs at least one selected term");
  }
  const FitResult& fit = trace.final_fit;
  if (!(fit.ss_total > 0.0)) {
    throw Error(ErrorCode::DegenerateResponse, kModule, "response has zero total sum of squares");
  }
  RankingTable table;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    RankingRow row;
    row.label = s.label;
    row.name = long_names.empty() ? s.label : term_name(s.term, long_names);
    row.coefficient = fit.coefficient(s.term);
    row.variation_percent = 100.0 * s.ss_sequential / fit.ss_total;
    row.entry_order = static_cast<int>(i + 1);
    table.rows.push_back(std::move(row));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
    return a.variation_percent > b.variation_percent;
  });
  for (std::size_t i = 0; i < table.rows.size(); ++i) table.rows[i].rank = static_cast<int>(i + 1);
  return table;
}

Json to_json(const SelectionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back(
        {{"label", s.label}, {"f", s.f_stat}, {"p", s.p_value}, {"ss_seq", s.ss_sequential}});
  }
  return Json{{"alpha_enter", trace.alpha_enter},
              {"steps", std::move(steps)},
              {"stopped_reason", std::string(to_string(trace.stopped_reason))},
              {"notes", trace.notes}};
}

std::string to_csv(const RankingTable& table) {
  std::string out = "rank,label,name,coefficient,variation_percent\n";
  for (const auto& r : table.rows) {
    out += csv::join({std::to_string(r.rank), r.label, r.name, csv::format_real(r.coefficient),
                      csv::format_real(r.variation_percent)}) +
           "\n";
  }
  return out;
}

std::string to_markdown(const RankingTable& table) {
  std::string out =
      "| Rank | Variable | Name | Coefficient | Variation |\n"
      "|---:|---|---|---:|---:|\n";
  for (const auto& r : table.rows) {
    char coef[40];
    std::snprintf(coef, sizeof coef, "%.6g", r.coefficient);
    out += "| " + std::to_string(r.rank) + " | " + r.label + " | " + r.name + " | " + coef +
           " | " + csv::format_fixed2(r.variation_percent) + "% |\n";
  }
  return out;
}

RankingTable parse_ranking_csv(std::string_view text) {
  csv::Document doc;
  try {
    doc = csv::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, kModule, std::string("ranking file: ") + e.what());
  }
  const auto rank_col = doc.column("rank");
  const auto label_col = doc.column("label");
  if (!rank_col || !label_col) {
    throw Error(ErrorCode::ParseError, kModule, "ranking file needs 'rank' and 'label' columns");
  }
  if (doc.rows.empty()) throw Error(ErrorCode::ParseError, kModule, "ranking file has no rows");
  const auto name_col = doc.column("name");
  const auto coef_col = doc.column("coefficient");
  const auto var_col = doc.column("variation_percent");

  auto get = [&](std::size_t r, std::optional<std::size_t> c) -> std::string {
    if (!c || *c >= doc.rows[r].size()) return {};
    return csv::trim(doc.rows[r][*c]);
  };
  auto number = [&](const std::string& s, std::size_t r) {
    if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::ParseError, kModule,
                  "bad number '" + s + "' on line " + std::to_string(doc.line_of[r]));
    }
    return v;
  };

  RankingTable table;
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    RankingRow row;
    const std::string rank = get(r, rank_col);
    auto [ptr, ec] = std::from_chars(rank.data(), rank.data() + rank.size(), row.rank);
    if (rank.empty() || ec != std::errc() || ptr != rank.data() + rank.size() || row.rank < 1) {
      throw Error(ErrorCode::ParseError, kModule,
                  "bad rank '" + rank + "' on line " + std::to_string(doc.line_of[r]));
    }
    row.label = get(r, label_col);
    if (row.label.empty()) {
      throw Error(ErrorCode::ParseError, kModule,
                  "blank label on line " + std::to_string(doc.line_of[r]));
    }
    row.name = get(r, name_col);
    if (row.name.empty()) row.name = row.label;
    row.coefficient = number(get(r, coef_col), r);
    row.variation_percent = number(get(r, var_col), r);
    table.rows.push_back(std::move(row));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const auto& a, const auto& b) { return a.rank < b.rank; });
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (table.rows[i].rank != static_cast<int>(i + 1)) {
      throw Error(ErrorCode::ParseError, kModule, "ranks must be contiguous from 1");
    }
  }
  return table;
}

}  // namespace co2attr
