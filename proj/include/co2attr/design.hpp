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

#ifndef CO2ATTR_DESIGN_HPP
#define CO2ATTR_DESIGN_HPP

#include <Eigen/Dense>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "co2attr/data_ingest.hpp"

namespace co2attr {

enum class TermKind { Intercept, Main, Interaction, Quadratic };

/// A second-order model term over 0-based factor indices. Interactions keep
/// first < second; quadratics and mains use `first` only.
struct Term {
  TermKind kind = TermKind::Intercept;
  int first = -1;
  int second = -1;

  static Term intercept() { return {TermKind::Intercept, -1, -1}; }
  static Term main(int i) { return {TermKind::Main, i, -1}; }
  static Term interaction(int i, int j);  // normalizes to i < j
  static Term quadratic(int i) { return {TermKind::Quadratic, i, -1}; }

  auto operator<=>(const Term&) const = default;
};

/// Short-label form: "Ga", "Ga:Bu", "Li^2". Throws UnknownFactor when an
/// index has no name.
std::string term_label(const Term& t, std::span<const std::string> names);

/// Long-name form used in comparison tables: "Gas", "Gas:Bunker", "Liquid:Liquid".
std::string term_name(const Term& t, std::span<const std::string> long_names);

/// Parses the short-label form back into a Term.
Term parse_term(std::string_view label, std::span<const std::string> names);

/// k mains, then the k(k-1)/2 interactions in lexicographic (i, j) order,
/// then k quadratics. The intercept is not a candidate.
std::vector<Term> enumerate_terms(int k);

/// Value of a term at one observation of the raw factors.
double evaluate_term(const Term& t, std::span<const double> x);

struct DesignMatrix {
  std::vector<Term> columns;
  Eigen::MatrixXd values;  // n x p, column order matches `columns`
  std::vector<std::string> labels;

  Eigen::Index n() const noexcept { return values.rows(); }
  Eigen::Index p() const noexcept { return values.cols(); }
  bool has_intercept() const noexcept {
    return !columns.empty() && columns.front().kind == TermKind::Intercept;
  }
};

/// Builds raw (uncentered) columns for `terms`, prepending a column of ones
/// when requested. Throws UnknownTerm for an index outside the dataset.
DesignMatrix build_design_matrix(const Dataset& ds, std::span<const Term> terms,
                                 bool include_intercept);

}  // namespace co2attr

#endif  // CO2ATTR_DESIGN_HPP
