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

// Ordinary least squares by Householder QR, with goodness-of-fit statistics
// and nested-model F tests.

#ifndef CO2ATTR_REGRESS_HPP
#define CO2ATTR_REGRESS_HPP

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "co2attr/design.hpp"
#include "co2attr/json.hpp"

namespace co2attr {

struct FitOptions {
  // Column j is dependent when |R_jj| <= rank_tol * ||X_j||.
  double rank_tol = 1e-10;
};

struct FitResult {
  std::vector<Term> terms;  // design columns, intercept first when present
  std::vector<std::string> labels;
  bool has_intercept = false;

  Eigen::VectorXd coefficients;
  Eigen::VectorXd fitted;
  Eigen::VectorXd residuals;
  Eigen::VectorXd hat_diag;

  double ss_total = 0.0;  // corrected when has_intercept, else uncorrected
  double ss_regression = 0.0;
  double ss_error = 0.0;
  double ss_raw = 0.0;  // sum of y^2
  int df_error = 0;
  int df_total = 0;
  int n = 0;
  int p = 0;

  double coefficient(const Term& t) const;  // 0 when the term is absent
};

struct GofStats {
  double r2 = 0.0;
  double r2_adjusted = 0.0;
  double press = 0.0;
};

struct FTest {
  double f_stat = 0.0;
  double p_value = 1.0;
  int df_num = 0;
  int df_den = 0;
};

FitResult fit_ols(const DesignMatrix& x, std::span<const double> y, FitOptions opts = {});

/// PRESS via the leverage identity sum (e_i / (1 - h_ii))^2.
double press(const FitResult& f);

/// Leave-one-out residuals e_i / (1 - h_ii). Throws LeverageOne.
Eigen::VectorXd press_residuals(const FitResult& f);

GofStats goodness_of_fit(const FitResult& f);

FTest partial_f_test(const FitResult& full, const FitResult& reduced);

/// True when SS_e is at rounding level relative to the response.
bool is_exact_fit(const FitResult& f);

/// {terms, coefficients, r2, r2_adjusted, press, n, p} plus sums of squares.
Json to_json(const FitResult& f, const GofStats& gof);

}  // namespace co2attr

#endif  // CO2ATTR_REGRESS_HPP
