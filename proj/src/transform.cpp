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

#include "co2attr/transform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "co2attr/csv.hpp"
#include "co2attr/error.hpp"

namespace co2attr {

namespace {

constexpr const char* kModule = "transform";

double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Two-pass population variance.
double pvariance_of(std::span<const double> v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size());
}

}  // namespace

double power_transform(double y, PowerTransform t) {
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw Error(ErrorCode::DomainError, kModule,
                "power transform needs positive finite input, got " + csv::format_real(y));
  }
  return t.lambda == 0.0 ? std::log(y) : std::pow(y, t.lambda);
}

double inverse_power_transform(double z, PowerTransform t) {
  if (t.lambda == 0.0) return std::exp(z);
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw Error(ErrorCode::DomainError, kModule,
                "inverse power transform needs positive finite input, got " +
                    csv::format_real(z));
  }
  return std::pow(z, 1.0 / t.lambda);
}

std::vector<double> power_transform(std::span<const double> y, PowerTransform t) {
  std::vector<double> out;
  out.reserve(y.size());
  for (double v : y) out.push_back(power_transform(v, t));
  return out;
}

std::vector<double> inverse_power_transform(std::span<const double> z, PowerTransform t) {
  std::vector<double> out;
  out.reserve(z.size());
  for (double v : z) out.push_back(inverse_power_transform(v, t));
  return out;
}

NormalityReport normality_check(std::span<const double> y, double alpha) {
  const std::size_t n = y.size();
  if (n < 8) {
    throw Error(ErrorCode::SampleTooSmall, kModule,
                "normality check needs at least 8 observations, got " + std::to_string(n));
  }
  std::vector<double> x(y.begin(), y.end());
  std::sort(x.begin(), x.end());
  if (x.front() == x.back()) {
    throw Error(ErrorCode::DegenerateSample, kModule, "normality check on a constant sample");
  }
  const double mu = mean_of(x);
  double ss = 0.0;
  for (double v : x) ss += (v - mu) * (v - mu);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0)) {
    throw Error(ErrorCode::DegenerateSample, kModule, "normality check on a constant sample");
  }

  // A^2 = -n - (1/n) sum (2i-1) [ln F(z_i) + ln(1 - F(z_{n+1-i}))]
  const double nd = static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = (x[i] - mu) / sd;
    const double hi = (x[n - 1 - i] - mu) / sd;
    const double log_cdf = std::log(0.5 * std::erfc(-lo / std::sqrt(2.0)));
    const double log_sf = std::log(0.5 * std::erfc(hi / std::sqrt(2.0)));
    acc += (2.0 * static_cast<double>(i) + 1.0) * (log_cdf + log_sf);
  }
  NormalityReport rep;
  rep.n = n;
  rep.alpha = alpha;
  rep.statistic = std::max(0.0, -nd - acc / nd);
  const double a = rep.statistic * (1.0 + 0.75 / nd + 2.25 / (nd * nd));
  rep.statistic_adjusted = a;

  // D'Agostino & Stephens (1986), Table 4.9, case of estimated mean and variance.
  double p = 0.0;
  if (a >= 0.6) {
    p = std::exp(1.2937 - 5.709 * a + 0.0186 * a * a);
  } else if (a >= 0.34) {
    p = std::exp(0.9177 - 4.279 * a - 1.38 * a * a);
  } else if (a >= 0.2) {
    p = 1.0 - std::exp(-8.318 + 42.796 * a - 59.938 * a * a);
  } else {
    p = 1.0 - std::exp(-13.436 + 101.14 * a - 223.73 * a * a);
  }
  rep.p_value = std::clamp(p, 0.0, 1.0);
  rep.passed = rep.p_value > alpha;
  return rep;
}

double box_cox_profile_lambda(std::span<const double> y, double lo, double hi) {
  if (y.size() < 2) {
    throw Error(ErrorCode::SampleTooSmall, kModule, "lambda search needs at least 2 observations");
  }
  double sum_log = 0.0;
  for (double v : y) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::DomainError, kModule, "lambda search needs positive data");
    }
    sum_log += std::log(v);
  }
  const double nd = static_cast<double>(y.size());
  // Var((y^l - 1)/l) = Var(y^l)/l^2, computed without the cancelling shift.
  auto loglik = [&](double lambda) {
    double var = 0.0;
    if (std::abs(lambda) < 1e-12) {
      std::vector<double> z;
      for (double v : y) z.push_back(std::log(v));
      var = pvariance_of(z);
    } else {
      var = pvariance_of(power_transform(y, PowerTransform{lambda})) / (lambda * lambda);
    }
    return -0.5 * nd * std::log(var) + (lambda - 1.0) * sum_log;
  };

  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = loglik(c), fd = loglik(d);
  for (int it = 0; it < 200 && (b - a) > 1e-10; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = loglik(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = loglik(d);
    }
  }
  return 0.5 * (a + b);
}

Json to_json(const NormalityReport& report) {
  return Json{{"test", "anderson-darling"},
              {"statistic", report.statistic},
              {"statistic_adjusted", report.statistic_adjusted},
              {"p_value", report.p_value},
              {"n", report.n},
              {"alpha", report.alpha},
              {"passed", report.passed}};
}

}  // namespace co2attr
