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

#include "co2attr/regress.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "co2attr/error.hpp"
#include "co2attr/special.hpp"

namespace co2attr {

namespace {

constexpr const char* kModule = "regress";

// 1 - h below this is treated as h == 1.
constexpr double kLeverageTol = 1e-10;

}  // namespace

double FitResult::coefficient(const Term& t) const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] == t) return coefficients[static_cast<Eigen::Index>(i)];
  }
  return 0.0;
}

FitResult fit_ols(const DesignMatrix& x, std::span<const double> y, FitOptions opts) {
  const Eigen::Index n = x.n();
  const Eigen::Index p = x.p();
  if (static_cast<Eigen::Index>(y.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, kModule, "response length does not match design rows");
  }
  if (n < p) {
    throw Error(ErrorCode::Underdetermined, kModule,
                "n = " + std::to_string(n) + " observations for p = " + std::to_string(p) +
                    " parameters");
  }
  const Eigen::Map<const Eigen::VectorXd> yv(y.data(), n);

  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(x.values);
  const auto& packed = qr.matrixQR();
  for (Eigen::Index j = 0; j < p; ++j) {
    const double col_norm = x.values.col(j).norm();
    if (!(std::abs(packed(j, j)) > opts.rank_tol * col_norm)) {
      const std::string label =
          static_cast<std::size_t>(j) < x.labels.size() ? x.labels[static_cast<std::size_t>(j)]
                                                        : "column " + std::to_string(j);
      throw Error(ErrorCode::RankDeficient, kModule,
                  "design column '" + label + "' is linearly dependent on earlier columns");
    }
  }

  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, p);
  const Eigen::VectorXd qty = q.transpose() * yv;

  FitResult f;
  f.terms = x.columns;
  f.labels = x.labels;
  f.has_intercept = x.has_intercept();
  f.coefficients = packed.topLeftCorner(p, p).triangularView<Eigen::Upper>().solve(qty);
  f.fitted = q * qty;
  f.residuals = yv - f.fitted;
  f.hat_diag = q.rowwise().squaredNorm();
  f.n = static_cast<int>(n);
  f.p = static_cast<int>(p);
  f.df_error = f.n - f.p;
  f.ss_raw = yv.squaredNorm();
  f.ss_error = f.residuals.squaredNorm();
  if (f.has_intercept) {
    const double ybar = yv.mean();
    f.ss_total = (yv.array() - ybar).square().sum();
    f.ss_regression = (f.fitted.array() - ybar).square().sum();
    f.df_total = f.n - 1;
  } else {
    f.ss_total = f.ss_raw;
    f.ss_regression = f.fitted.squaredNorm();
    f.df_total = f.n;
  }
  return f;
}

Eigen::VectorXd press_residuals(const FitResult& f) {
  Eigen::VectorXd out(f.residuals.size());
  for (Eigen::Index i = 0; i < f.residuals.size(); ++i) {
    const double denom = 1.0 - f.hat_diag[i];
    if (denom <= kLeverageTol) {
      throw Error(ErrorCode::LeverageOne, kModule,
                  "observation " + std::to_string(i) + " has leverage 1");
    }
    out[i] = f.residuals[i] / denom;
  }
  return out;
}

double press(const FitResult& f) { return press_residuals(f).squaredNorm(); }

GofStats goodness_of_fit(const FitResult& f) {
  if (!(f.ss_total > 0.0)) {
    throw Error(ErrorCode::DegenerateResponse, kModule, "response has zero total sum of squares");
  }
  if (f.df_error <= 0) {
    throw Error(ErrorCode::LeverageOne, kModule, "saturated fit: every observation has leverage 1");
  }
  GofStats g;
  g.r2 = f.ss_regression / f.ss_total;
  g.r2_adjusted = 1.0 - (f.ss_error / f.df_error) / (f.ss_total / f.df_total);
  g.press = press(f);
  return g;
}

bool is_exact_fit(const FitResult& f) {
  const double scale = 64.0 * std::numeric_limits<double>::epsilon();
  return f.ss_error <= scale * scale * f.ss_raw;
}

FTest partial_f_test(const FitResult& full, const FitResult& reduced) {
  const int q = full.p - reduced.p;
  bool nested = q >= 1 && full.n == reduced.n;
  for (const auto& t : reduced.terms) {
    if (!nested) break;
    nested = std::find(full.terms.begin(), full.terms.end(), t) != full.terms.end();
  }
  if (!nested) {
    throw Error(ErrorCode::NotNested, kModule,
                "reduced model is not a strict sub-model of the full model");
  }
  if (full.df_error <= 0) {
    throw Error(ErrorCode::Underdetermined, kModule, "full model has no error degrees of freedom");
  }
  if (is_exact_fit(full)) {
    throw Error(ErrorCode::DegenerateResponse, kModule,
                "full model fits exactly; F statistic is undefined");
  }
  FTest t;
  t.df_num = q;
  t.df_den = full.df_error;
  const double drop = std::max(0.0, reduced.ss_error - full.ss_error);
  t.f_stat = (drop / q) / (full.ss_error / full.df_error);
  t.p_value = special::f_upper_tail(t.f_stat, q, full.df_error);
  return t;
}

Json to_json(const FitResult& f, const GofStats& gof) {
  Json terms = Json::array();
  Json coefs = Json::array();
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    terms.push_back(f.labels.at(i));
    coefs.push_back(f.coefficients[static_cast<Eigen::Index>(i)]);
  }
  return Json{{"terms", std::move(terms)},
              {"coefficients", std::move(coefs)},
              {"r2", gof.r2},
              {"r2_adjusted", gof.r2_adjusted},
              {"press", gof.press},
              {"n", f.n},
              {"p", f.p},
              {"ss_total", f.ss_total},
              {"ss_regression", f.ss_regression},
              {"ss_error", f.ss_error},
              {"df_error", f.df_error},
              {"df_total", f.df_total}};
}

}  // namespace co2attr
