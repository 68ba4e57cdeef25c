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

#ifndef CO2ATTR_TRANSFORM_HPP
#define CO2ATTR_TRANSFORM_HPP

#include <span>
#include <vector>

#include "co2attr/json.hpp"

namespace co2attr {

/// Pure power transform y -> y^lambda; lambda == 0 selects ln(y).
struct PowerTransform {
  double lambda = -2.376;
};

std::vector<double> power_transform(std::span<const double> y, PowerTransform t);
std::vector<double> inverse_power_transform(std::span<const double> z, PowerTransform t);

double power_transform(double y, PowerTransform t);
double inverse_power_transform(double z, PowerTransform t);

struct NormalityReport {
  double statistic = 0.0;           // A^2 with mean and variance estimated
  double statistic_adjusted = 0.0;  // A^2 (1 + 0.75/n + 2.25/n^2)
  double p_value = 1.0;
  std::size_t n = 0;
  double alpha = 0.05;
  bool passed = true;
};

/// Anderson-Darling normality test with estimated parameters. Needs n >= 8
/// and a non-constant sample.
NormalityReport normality_check(std::span<const double> y, double alpha);

/// Maximum-likelihood Box-Cox exponent over [lo, hi] (profile likelihood,
/// golden-section search). Report-only; never replaces the configured lambda.
double box_cox_profile_lambda(std::span<const double> y, double lo = -5.0, double hi = 5.0);

Json to_json(const NormalityReport& report);

}  // namespace co2attr

#endif  // CO2ATTR_TRANSFORM_HPP
