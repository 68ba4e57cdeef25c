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

#include "co2attr/design.hpp"

#include <algorithm>

#include "co2attr/csv.hpp"
#include "co2attr/error.hpp"

namespace co2attr {

namespace {

constexpr const char* kModule = "design";

const std::string& name_at(std::span<const std::string> names, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= names.size()) {
    throw Error(ErrorCode::UnknownFactor, kModule,
                "no factor name for index " + std::to_string(i));
  }
  return names[static_cast<std::size_t>(i)];
}

int index_of(std::span<const std::string> names, std::string_view name) {
  const std::string wanted = csv::trim(name);
  auto it = std::find(names.begin(), names.end(), wanted);
  if (it == names.end()) {
    throw Error(ErrorCode::UnknownFactor, kModule, "unknown factor '" + wanted + "'");
  }
  return static_cast<int>(it - names.begin());
}

}  // namespace

Term Term::interaction(int i, int j) {
  if (i > j) std::swap(i, j);
  return {TermKind::Interaction, i, j};
}

std::string term_label(const Term& t, std::span<const std::string> names) {
  switch (t.kind) {
    case TermKind::Intercept:
      return "Intercept";
    case TermKind::Main:
      return name_at(names, t.first);
    case TermKind::Interaction:
      return name_at(names, t.first) + ":" + name_at(names, t.second);
    case TermKind::Quadratic:
      return name_at(names, t.first) + "^2";
  }
  return {};
}

std::string term_name(const Term& t, std::span<const std::string> long_names) {
  if (t.kind == TermKind::Quadratic) {
    const auto& n = name_at(long_names, t.first);
    return n + ":" + n;
  }
  return term_label(t, long_names);
}

Term parse_term(std::string_view label, std::span<const std::string> names) {
  const std::string s = csv::trim(label);
  if (s == "Intercept") return Term::intercept();
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "^2") == 0) {
    return Term::quadratic(index_of(names, s.substr(0, s.size() - 2)));
  }
  if (auto colon = s.find(':'); colon != std::string::npos) {
    const int i = index_of(names, s.substr(0, colon));
    const int j = index_of(names, s.substr(colon + 1));
    return i == j ? Term::quadratic(i) : Term::interaction(i, j);
  }
  return Term::main(index_of(names, s));
}

std::vector<Term> enumerate_terms(int k) {
  if (k < 1) {
    throw Error(ErrorCode::EmptyFactorSet, kModule, "candidate expansion needs at least 1 factor");
  }
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(k * (k + 3) / 2));
  for (int i = 0; i < k; ++i) terms.push_back(Term::main(i));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) terms.push_back(Term::interaction(i, j));
  }
  for (int i = 0; i < k; ++i) terms.push_back(Term::quadratic(i));
  return terms;
}

double evaluate_term(const Term& t, std::span<const double> x) {
  auto at = [&](int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= x.size()) {
      throw Error(ErrorCode::UnknownTerm, kModule,
                  "term index " + std::to_string(i) + " outside " + std::to_string(x.size()) +
                      " factors");
    }
    return x[static_cast<std::size_t>(i)];
  };
  switch (t.kind) {
    case TermKind::Intercept:
      return 1.0;
    case TermKind::Main:
      return at(t.first);
    case TermKind::Interaction:
      return at(t.first) * at(t.second);
    case TermKind::Quadratic:
      return at(t.first) * at(t.first);
  }
  return 0.0;
}

DesignMatrix build_design_matrix(const Dataset& ds, std::span<const Term> terms,
                                 bool include_intercept) {
  const auto n = static_cast<Eigen::Index>(ds.n());
  const int k = static_cast<int>(ds.k());
  const auto names = ds.predictor_names();

  DesignMatrix dm;
  if (include_intercept) dm.columns.push_back(Term::intercept());
  for (const auto& t : terms) {
    const bool bad = t.kind == TermKind::Intercept ||
                     t.first < 0 || t.first >= k ||
                     (t.kind == TermKind::Interaction &&
                      (t.second <= t.first || t.second >= k));
    if (bad) {
      throw Error(ErrorCode::UnknownTerm, kModule,
                  "term (" + std::to_string(t.first) + ", " + std::to_string(t.second) +
                      ") is not a valid term over " + std::to_string(k) + " factors");
    }
    dm.columns.push_back(t);
  }

  dm.values.resize(n, static_cast<Eigen::Index>(dm.columns.size()));
  for (std::size_t c = 0; c < dm.columns.size(); ++c) {
    const Term& t = dm.columns[c];
    auto col = dm.values.col(static_cast<Eigen::Index>(c));
    auto x = [&](int f) {
      return Eigen::Map<const Eigen::VectorXd>(ds.predictors[static_cast<std::size_t>(f)].values.data(), n);
    };
    switch (t.kind) {
      case TermKind::Intercept:
        col.setOnes();
        break;
      case TermKind::Main:
        col = x(t.first);
        break;
      case TermKind::Interaction:
        col = x(t.first).cwiseProduct(x(t.second));
        break;
      case TermKind::Quadratic:
        col = x(t.first).cwiseProduct(x(t.first));
        break;
    }
    dm.labels.push_back(term_label(t, names));
  }
  return dm;
}

}  // namespace co2attr
