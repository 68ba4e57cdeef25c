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

#include "co2attr/quadform.hpp"

#include <cmath>

#include "co2attr/csv.hpp"
#include "co2attr/error.hpp"

namespace co2attr {

namespace {

constexpr const char* kModule = "quadform";

// Neumaier summation fed with error-free products, so heavy cancellation
// between terms costs no more than a final rounding.
class AccurateSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
  }
  // Adds c * a * b.
  void add_product(double c, double a, double b = 1.0) {
    const double ab = a * b;
    const double ab_err = std::fma(a, b, -ab);
    const double hi = c * ab;
    add(hi);
    add(std::fma(c, ab, -hi));
    add(c * ab_err);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

QuadraticForm assemble(const FitResult& f, int k, std::vector<std::string> factor_names) {
  QuadraticForm q;
  q.beta = Eigen::VectorXd::Zero(k);
  q.B = Eigen::MatrixXd::Zero(k, k);
  q.factor_names = std::move(factor_names);

  auto in_range = [k](int i) { return i >= 0 && i < k; };
  for (std::size_t c = 0; c < f.terms.size(); ++c) {
    const Term& t = f.terms[c];
    const double coef = f.coefficients[static_cast<Eigen::Index>(c)];
    const bool ok = t.kind == TermKind::Intercept ||
                    (in_range(t.first) && (t.kind != TermKind::Interaction || in_range(t.second)));
    if (!ok) {
      throw Error(ErrorCode::UnknownTerm, kModule,
                  "term '" + (c < f.labels.size() ? f.labels[c] : std::to_string(c)) +
                      "' lies outside " + std::to_string(k) + " factors");
    }
    switch (t.kind) {
      case TermKind::Intercept:
        q.beta0 += coef;
        break;
      case TermKind::Main:
        q.beta[t.first] += coef;
        break;
      case TermKind::Quadratic:
        q.B(t.first, t.first) += coef;
        break;
      case TermKind::Interaction: {
        const double half = 0.5 * coef;
        q.B(t.first, t.second) += half;
        q.B(t.second, t.first) += half;
        break;
      }
    }
  }
  return q;
}

std::vector<std::pair<Term, double>> coefficients_of(const QuadraticForm& q) {
  std::vector<std::pair<Term, double>> out;
  if (q.beta0 != 0.0) out.emplace_back(Term::intercept(), q.beta0);
  for (int i = 0; i < q.k(); ++i) {
    if (q.beta[i] != 0.0) out.emplace_back(Term::main(i), q.beta[i]);
  }
  for (int i = 0; i < q.k(); ++i) {
    for (int j = i + 1; j < q.k(); ++j) {
      if (q.B(i, j) != 0.0) out.emplace_back(Term::interaction(i, j), 2.0 * q.B(i, j));
    }
  }
  for (int i = 0; i < q.k(); ++i) {
    if (q.B(i, i) != 0.0) out.emplace_back(Term::quadratic(i), q.B(i, i));
  }
  return out;
}

double evaluate(const QuadraticForm& q, std::span<const double> x) {
  if (static_cast<int>(x.size()) != q.k()) {
    throw Error(ErrorCode::InvalidArgument, kModule,
                "point has " + std::to_string(x.size()) + " coordinates, form has " +
                    std::to_string(q.k()));
  }
  // x'Bx is expanded over the upper triangle; 2 * B_ij is exact.
  AccurateSum acc;
  acc.add(q.beta0);
  for (int i = 0; i < q.k(); ++i) {
    acc.add_product(q.beta[i], x[i]);
    acc.add_product(q.B(i, i), x[i], x[i]);
    for (int j = i + 1; j < q.k(); ++j) acc.add_product(2.0 * q.B(i, j), x[i], x[j]);
  }
  return acc.value();
}

Prediction predict(const QuadraticForm& q, std::span<const double> x, PowerTransform t) {
  Prediction p;
  p.transformed = evaluate(q, x);
  if (t.lambda != 0.0 && !(p.transformed > 0.0)) {
    throw Error(ErrorCode::BackTransformDomain, kModule,
                "transformed prediction " + csv::format_real(p.transformed) +
                    " has no ppmv preimage");
  }
  p.ppmv = inverse_power_transform(p.transformed, t);
  return p;
}

Json to_json(const QuadraticForm& q) {
  Json beta = Json::array();
  for (int i = 0; i < q.k(); ++i) beta.push_back(q.beta[i]);
  Json b = Json::array();
  for (int i = 0; i < q.k(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < q.k(); ++j) row.push_back(q.B(i, j));
    b.push_back(std::move(row));
  }
  return Json{{"beta0", q.beta0},
              {"beta", std::move(beta)},
              {"B", std::move(b)},
              {"factor_names", q.factor_names}};
}

}  // namespace co2attr
