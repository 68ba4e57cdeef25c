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

#include <boost/math/distributions/fisher_f.hpp>

#include "co2attr/error.hpp"
#include "co2attr/stepwise.hpp"
#include "test_support.hpp"

using namespace co2attr;
using co2attr::testing::error_code_of;
using co2attr::testing::make_dataset;
using co2attr::testing::random_dataset;
using co2attr::testing::reference_lstsq;
using co2attr::testing::rel_err;
using co2attr::testing::Rng;

namespace {

double reference_sse(const Dataset& ds, const std::vector<Term>& terms,
                     const std::vector<double>& y) {
  const auto n = static_cast<Eigen::Index>(ds.n());
  Eigen::MatrixXd x(n, static_cast<Eigen::Index>(terms.size()) + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    std::vector<double> row;
    for (const auto& p : ds.predictors) row.push_back(p.values[static_cast<std::size_t>(i)]);
    x(i, 0) = 1.0;
    for (std::size_t c = 0; c < terms.size(); ++c) {
      const auto& t = terms[c];
      double v = row[static_cast<std::size_t>(t.first)];
      if (t.kind == TermKind::Interaction) v *= row[static_cast<std::size_t>(t.second)];
      if (t.kind == TermKind::Quadratic) v *= v;
      x(i, static_cast<Eigen::Index>(c) + 1) = v;
    }
  }
  const Eigen::Map<const Eigen::VectorXd> yv(y.data(), n);
  return (yv - x * reference_lstsq(x, yv)).squaredNorm();
}

// Plain greedy forward selection with boost's F distribution.
std::vector<Term> reference_forward(const Dataset& ds, const std::vector<double>& y,
                                    const std::vector<Term>& cands, double alpha) {
  std::vector<Term> chosen;
  std::vector<bool> used(cands.size(), false);
  const double n = static_cast<double>(ds.n());
  while (true) {
    const double sse0 = reference_sse(ds, chosen, y);
    double best_p = 2.0;
    std::size_t best = cands.size();
    for (std::size_t c = 0; c < cands.size(); ++c) {
      if (used[c]) continue;
      auto trial = chosen;
      trial.push_back(cands[c]);
      const double df = n - static_cast<double>(trial.size()) - 1.0;
      if (df < 1.0) continue;
      const double sse1 = reference_sse(ds, trial, y);
      const double f = (sse0 - sse1) / (sse1 / df);
      const boost::math::fisher_f_distribution<double> dist(1.0, df);
      const double p = boost::math::cdf(boost::math::complement(dist, std::max(f, 0.0)));
      if (p < best_p) {
        best_p = p;
        best = c;
      }
    }
    if (best == cands.size() || !(best_p <= alpha)) break;
    used[best] = true;
    chosen.push_back(cands[best]);
  }
  return chosen;
}

}  // namespace

TEST_SUITE("stepwise") {

TEST_CASE("signal term enters and noise term does not") {
  Rng rng(41);
  auto ds = random_dataset(rng, 40, 2, 0.0, 1.0);
  std::vector<double> y;
  for (double x : ds.predictors[0].values) y.push_back(2.0 * x + 1e-3 * rng.normal());
  const std::vector<Term> cands{Term::main(0), Term::main(1)};
  const auto trace = forward_select(ds, y, cands, 0.01);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].term == Term::main(0));
  CHECK(trace.stopped_reason == StopReason::NoCandidateSignificant);

  // The rejected term's p-value after x1, computed directly.
  const double sse1 = reference_sse(ds, {Term::main(0)}, y);
  const double sse2 = reference_sse(ds, {Term::main(0), Term::main(1)}, y);
  const double f = (sse1 - sse2) / (sse2 / 37.0);
  const boost::math::fisher_f_distribution<double> dist(1.0, 37.0);
  CHECK(boost::math::cdf(boost::math::complement(dist, f)) > 0.01);
}

TEST_CASE("alpha zero admits nothing") {
  Rng rng(42);
  auto ds = random_dataset(rng, 20, 1);
  std::vector<double> y;
  for (double x : ds.predictors[0].values) y.push_back(x);
  const std::vector<Term> cands{Term::main(0)};
  const auto trace = forward_select(ds, y, cands, 0.0);
  CHECK(trace.steps.empty());
  CHECK(trace.stopped_reason == StopReason::NoCandidateSignificant);
  CHECK(trace.final_fit.p == 1);
  CHECK(error_code_of([&] { ranking(trace); }) == ErrorCode::EmptySelection);
}

TEST_CASE("exhaustion and rank guard") {
  Rng rng(43);
  auto ds = random_dataset(rng, 30, 2);
  std::vector<double> y;
  for (int i = 0; i < 30; ++i) {
    y.push_back(ds.predictors[0].values[i] - ds.predictors[1].values[i] + 0.01 * rng.normal());
  }
  const std::vector<Term> both{Term::main(0), Term::main(1)};
  CHECK(forward_select(ds, y, both, 0.05).stopped_reason == StopReason::CandidateExhaustion);

  ds.predictors.push_back({"x3", ds.predictors[0].values});
  const std::vector<Term> dup{Term::main(0), Term::main(1), Term::main(2)};
  const auto trace = forward_select(ds, y, dup, 0.05);
  CHECK(trace.steps.size() == 2);
  CHECK(trace.stopped_reason == StopReason::RankGuard);
  CHECK_FALSE(trace.notes.empty());

  auto zero = ds;
  for (auto& v : zero.predictors[0].values) v = 0.0;
  const std::vector<Term> only{Term::main(0)};
  CHECK(error_code_of([&] { forward_select(zero, y, only, 0.05); }) ==
        ErrorCode::NoUsableCandidates);
}

TEST_CASE("matches an independent greedy selection") {
  Rng rng(44);
  int compared = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.integer(20, 45);
    const auto ds = random_dataset(rng, n, 2, 0.5, 2.0);
    const auto cands = enumerate_terms(2);  // 5 candidates
    std::vector<double> y;
    for (int i = 0; i < n; ++i) {
      const double a = ds.predictors[0].values[i];
      const double b = ds.predictors[1].values[i];
      y.push_back(1.0 + rng.uniform(-1.0, 1.0) * a + 0.7 * a * b + 0.3 * rng.normal());
    }
    const auto got = forward_select(ds, y, cands, 0.05).selected_terms();
    CHECK(got == reference_forward(ds, y, cands, 0.05));
    ++compared;
  }
  CHECK(compared == 25);
}

TEST_CASE("selection is unchanged by rescaling the response") {
  Rng rng(45);
  const auto ds = random_dataset(rng, 35, 3, 0.0, 1.0);
  std::vector<double> y;
  for (int i = 0; i < 35; ++i) {
    y.push_back(ds.predictors[0].values[i] * ds.predictors[2].values[i] +
                0.05 * rng.normal());
  }
  std::vector<double> scaled;
  for (double v : y) scaled.push_back(1e-6 * v);
  const auto cands = enumerate_terms(3);
  const auto a = forward_select(ds, y, cands, 0.01);
  const auto b = forward_select(ds, scaled, cands, 0.01);
  CHECK(a.selected_terms() == b.selected_terms());
  CHECK_FALSE(a.steps.empty());
  const auto c = forward_select(ds, y, cands, 0.01);
  CHECK(to_json(a).dump() == to_json(c).dump());
}

TEST_CASE("sequential sums of squares add up to SS_regression") {
  Rng rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ds = random_dataset(rng, 40, 3, 0.0, 1.0);
    std::vector<double> y;
    for (int i = 0; i < 40; ++i) {
      const double a = ds.predictors[0].values[i];
      const double b = ds.predictors[1].values[i];
      y.push_back(a + 2.0 * b * b - a * b + 0.05 * rng.normal());
    }
    const auto trace = forward_select(ds, y, enumerate_terms(3), 0.05);
    double sum = 0.0;
    for (const auto& s : trace.steps) sum += s.ss_sequential;
    CHECK(rel_err(sum, trace.final_fit.ss_regression) <= 1e-8);
    const auto table = ranking(trace);
    double pct = 0.0;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      pct += table.rows[i].variation_percent;
      if (i > 0) CHECK(table.rows[i].variation_percent <= table.rows[i - 1].variation_percent);
      CHECK(table.rows[i].rank == static_cast<int>(i + 1));
    }
    CHECK(pct <= 100.0 + 1e-9);
  }
}

TEST_CASE("single exact term explains everything") {
  const auto ds = make_dataset({{1.0, 2.0, 3.0, 4.0, 6.0}});
  const std::vector<double> y{3.0, 5.0, 7.0, 9.0, 13.0};
  const std::vector<Term> cands{Term::main(0)};
  const auto trace = forward_select(ds, y, cands, 0.01);
  REQUIRE(trace.steps.size() == 1);
  CHECK(std::isinf(trace.steps[0].f_stat));
  CHECK(trace.steps[0].p_value == 0.0);
  const std::vector<std::string> long_names{"Liquid"};
  const auto table = ranking(trace, long_names);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].variation_percent == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(table.rows[0].name == "Liquid");
  CHECK(table.rows[0].coefficient == doctest::Approx(2.0));
  CHECK(to_csv(table).rfind("rank,label,name,coefficient,variation_percent\n1,x1,Liquid,", 0) == 0);
  CHECK(to_markdown(table).find("| 1 | x1 | Liquid |") != std::string::npos);
}

TEST_CASE("ranking csv round trip and errors") {
  RankingTable t;
  t.rows.push_back({1, "Ga", "Gas", 1.5, 60.0, 1});
  t.rows.push_back({2, "Li:Bu", "Liquid:Bunker", -2.0, 40.0, 2});
  const auto back = parse_ranking_csv(to_csv(t));
  REQUIRE(back.rows.size() == 2);
  CHECK(back.rows[1].label == "Li:Bu");
  CHECK(back.rows[1].name == "Liquid:Bunker");
  CHECK(back.rows[0].coefficient == 1.5);

  const auto minimal = parse_ranking_csv("rank,label\n2,Ga\n1,Li\n");
  CHECK(minimal.rows[0].label == "Li");
  CHECK(std::isnan(minimal.rows[0].variation_percent));

  CHECK(error_code_of([] { parse_ranking_csv(""); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { parse_ranking_csv("rank,label\n"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { parse_ranking_csv("label\nGa\n"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { parse_ranking_csv("rank,label\n1,Ga\n3,Li\n"); }) ==
        ErrorCode::ParseError);
  CHECK(error_code_of([] { parse_ranking_csv("rank,label\nx,Ga\n"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { parse_ranking_csv("rank,label,coefficient\n1,Ga,abc\n"); }) ==
        ErrorCode::ParseError);
}

}  // TEST_SUITE
