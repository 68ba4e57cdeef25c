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

#ifndef CO2ATTR_QUADFORM_HPP
#define CO2ATTR_QUADFORM_HPP

#include <Eigen/Dense>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "co2attr/regress.hpp"
#include "co2attr/transform.hpp"

namespace co2attr {

/// Y = beta0 + beta' x + x' B x with B symmetric. Absent terms are zeros.
struct QuadraticForm {
  double beta0 = 0.0;
  Eigen::VectorXd beta;
  Eigen::MatrixXd B;
  std::vector<std::string> factor_names;

  int k() const noexcept { return static_cast<int>(beta.size()); }
};

/// Diagonal of B carries quadratic coefficients unchanged; each interaction
/// coefficient is split in half across B(i,j) and B(j,i).
QuadraticForm assemble(const FitResult& f, int k, std::vector<std::string> factor_names = {});

/// Reads the form back as (term, coefficient) pairs, zeros omitted,
/// intercept first, then mains, interactions, quadratics.
std::vector<std::pair<Term, double>> coefficients_of(const QuadraticForm& q);

double evaluate(const QuadraticForm& q, std::span<const double> x);

struct Prediction {
  double transformed = 0.0;
  double ppmv = 0.0;
};

/// Throws BackTransformDomain when the transformed value has no preimage.
Prediction predict(const QuadraticForm& q, std::span<const double> x, PowerTransform t);

Json to_json(const QuadraticForm& q);

}  // namespace co2attr

#endif  // CO2ATTR_QUADFORM_HPP
