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

#ifndef CO2ATTR_VALIDATE_HPP
#define CO2ATTR_VALIDATE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "co2attr/regress.hpp"
#include "co2attr/transform.hpp"

namespace co2attr {

struct FoldResult {
  std::vector<std::size_t> held_out;  // observation indices
  std::vector<int> held_out_years;
  std::vector<double> predicted;  // transformed scale
  std::vector<double> actual;     // transformed scale
  std::vector<double> predicted_ppmv;  // NaN where the back-transform is undefined
};

struct CrossValReport {
  int n_folds = 0;
  std::vector<double> residuals;  // actual - predicted, by observation index
  double mean_residual = 0.0;
  double var_residual = 0.0;  // population convention (divide by n)
  std::vector<FoldResult> per_fold;
};

/// Refit without each observation in turn and predict it.
CrossValReport loo_cross_validate(const Dataset& ds, std::span<const Term> terms, PowerTransform t,
                                  FitOptions opts = {});

/// Seeded Fisher-Yates shuffle (mt19937_64), then contiguous chunks whose
/// sizes differ by at most one. k == n reproduces loo_cross_validate.
CrossValReport k_fold_cross_validate(const Dataset& ds, std::span<const Term> terms,
                                     PowerTransform t, int k, std::uint64_t seed,
                                     FitOptions opts = {});

/// Observation order after the seeded shuffle used by k_fold_cross_validate.
std::vector<std::size_t> fold_permutation(std::size_t n, std::uint64_t seed);

struct QQPoint {
  double theoretical = 0.0;
  double sample = 0.0;
};

struct DiagnosticsBundle {
  std::vector<std::pair<double, double>> fitted_residual;
  std::vector<QQPoint> qq_points;  // theoretical quantile ascending
  std::vector<double> studentized;
  std::vector<double> leverage;
  std::vector<double> cooks_d;
};

/// Internally studentized residuals, Blom-position QQ data, leverage and
/// Cook's distance for a fitted model.
DiagnosticsBundle residual_diagnostics(const FitResult& f);

Json to_json(const CrossValReport& report);

std::string fitted_vs_residual_csv(const DiagnosticsBundle& d);
std::string qq_csv(const DiagnosticsBundle& d);
std::string influence_csv(const DiagnosticsBundle& d, std::span<const int> years = {});

}  // namespace co2attr

#endif  // CO2ATTR_VALIDATE_HPP
