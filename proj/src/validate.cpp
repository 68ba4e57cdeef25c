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

#include "co2attr/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "co2attr/csv.hpp"
#include "co2attr/error.hpp"
#include "co2attr/special.hpp"

namespace co2attr {

namespace {

constexpr const char* kModule = "validate";

CrossValReport run_folds(const Dataset& ds, std::span<const Term> terms, PowerTransform t,
                         const std::vector<std::vector<std::size_t>>& folds,
                         const FitOptions& opts) {
  const DesignMatrix full = build_design_matrix(ds, terms, true);
  const std::vector<double> z = power_transform(ds.response, t);
  const std::size_t n = ds.n();

  std::size_t largest = 0;
  for (const auto& f : folds) largest = std::max(largest, f.size());
  if (n - largest < static_cast<std::size_t>(full.p())) {
    throw Error(ErrorCode::Underdetermined, kModule,
                "training folds of " + std::to_string(n - largest) + " rows cannot fit " +
                    std::to_string(full.p()) + " parameters");
  }

  CrossValReport rep;
  rep.n_folds = static_cast<int>(folds.size());
  rep.residuals.assign(n, 0.0);

  std::vector<char> held(n, 0);
  for (std::size_t fi = 0; fi < folds.size(); ++fi) {
    const auto& fold = folds[fi];
    std::fill(held.begin(), held.end(), 0);
    for (auto i : fold) held[i] = 1;

    DesignMatrix train;
    train.columns = full.columns;
    train.labels = full.labels;
    train.values.resize(static_cast<Eigen::Index>(n - fold.size()), full.p());
    std::vector<double> y;
    y.reserve(n - fold.size());
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (held[i]) continue;
      train.values.row(row++) = full.values.row(static_cast<Eigen::Index>(i));
      y.push_back(z[i]);
    }

    FitResult fit;
    try {
      fit = fit_ols(train, y, opts);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RankDeficient) throw;
      throw Error(ErrorCode::FoldRankDeficient, kModule,
                  "fold " + std::to_string(fi) + ": " + e.what());
    }

    FoldResult fr;
    for (auto i : fold) {
      const double pred = full.values.row(static_cast<Eigen::Index>(i)).dot(fit.coefficients);
      fr.held_out.push_back(i);
      fr.held_out_years.push_back(ds.years[i]);
      fr.predicted.push_back(pred);
      fr.actual.push_back(z[i]);
      double ppmv = std::numeric_limits<double>::quiet_NaN();
      if (t.lambda == 0.0 || pred > 0.0) ppmv = inverse_power_transform(pred, t);
      fr.predicted_ppmv.push_back(ppmv);
      rep.residuals[i] = z[i] - pred;
    }
    rep.per_fold.push_back(std::move(fr));
  }

  const double nd = static_cast<double>(n);
  rep.mean_residual = std::accumulate(rep.residuals.begin(), rep.residuals.end(), 0.0) / nd;
  double ss = 0.0;
  for (double r : rep.residuals) ss += (r - rep.mean_residual) * (r - rep.mean_residual);
  rep.var_residual = ss / nd;
  return rep;
}

}  // namespace

std::vector<std::size_t> fold_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  // Fisher-Yates with rejection sampling; std::uniform_int_distribution is
  // implementation-defined, mt19937_64 output is not.
  std::mt19937_64 gen(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
      r = gen();
    } while (r >= limit);
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(r % bound)]);
  }
  return perm;
}

CrossValReport loo_cross_validate(const Dataset& ds, std::span<const Term> terms, PowerTransform t,
                                  FitOptions opts) {
  std::vector<std::vector<std::size_t>> folds;
  for (std::size_t i = 0; i < ds.n(); ++i) folds.push_back({i});
  return run_folds(ds, terms, t, folds, opts);
}

CrossValReport k_fold_cross_validate(const Dataset& ds, std::span<const Term> terms,
                                     PowerTransform t, int k, std::uint64_t seed,
                                     FitOptions opts) {
  const std::size_t n = ds.n();
  if (k < 2) {
    throw Error(ErrorCode::InvalidArgument, kModule, "k-fold needs k >= 2");
  }
  if (static_cast<std::size_t>(k) > n) {
    throw Error(ErrorCode::TooManyFolds,
                kModule, std::to_string(k) + " folds for " + std::to_string(n) + " observations");
  }
  const auto perm = fold_permutation(n, seed);
  const std::size_t kk = static_cast<std::size_t>(k);
  const std::size_t base = n / kk;
  const std::size_t extra = n % kk;
  std::vector<std::vector<std::size_t>> folds(kk);
  std::size_t pos = 0;
  for (std::size_t f = 0; f < kk; ++f) {
    const std::size_t size = base + (f < extra ? 1 : 0);
    folds[f].assign(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                    perm.begin() + static_cast<std::ptrdiff_t>(pos + size));
    pos += size;
  }
  return run_folds(ds, terms, t, folds, opts);
}

DiagnosticsBundle residual_diagnostics(const FitResult& f) {
  if (f.df_error < 2) {
    throw Error(ErrorCode::Underdetermined, kModule, "diagnostics need at least 2 error df");
  }
  const auto n = static_cast<std::size_t>(f.n);
  const bool exact = is_exact_fit(f);
  const double s2 = f.ss_error / f.df_error;
  const double s = std::sqrt(s2);

  DiagnosticsBundle d;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    const double e = f.residuals[ii];
    const double h = f.hat_diag[ii];
    if (1.0 - h <= 1e-10) {
      throw Error(ErrorCode::LeverageOne, kModule,
                  "observation " + std::to_string(i) + " has leverage 1");
    }
    d.fitted_residual.emplace_back(f.fitted[ii], e);
    d.leverage.push_back(h);
    if (exact) {
      d.studentized.push_back(0.0);
      d.cooks_d.push_back(0.0);
    } else {
      d.studentized.push_back(e / (s * std::sqrt(1.0 - h)));
      d.cooks_d.push_back(e * e * h / (f.p * s2 * (1.0 - h) * (1.0 - h)));
    }
  }

  std::vector<double> sorted(f.residuals.data(), f.residuals.data() + f.residuals.size());
  std::sort(sorted.begin(), sorted.end());
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double pos = (static_cast<double>(i + 1) - 0.375) / (nd + 0.25);
    d.qq_points.push_back({special::normal_quantile(pos), sorted[i]});
  }
  return d;
}

Json to_json(const CrossValReport& report) {
  Json folds = Json::array();
  for (const auto& f : report.per_fold) {
    Json pred_ppmv = Json::array();
    for (double v : f.predicted_ppmv) {
      if (std::isnan(v)) {
        pred_ppmv.push_back(nullptr);
      } else {
        pred_ppmv.push_back(v);
      }
    }
    folds.push_back({{"held_out_years", f.held_out_years},
                     {"predicted", f.predicted},
                     {"actual", f.actual},
                     {"predicted_ppmv", std::move(pred_ppmv)}});
  }
  return Json{{"n_folds", report.n_folds},
              {"mean_residual", report.mean_residual},
              {"var_residual", report.var_residual},
              {"residuals", report.residuals},
              {"per_fold", std::move(folds)}};
}

std::string fitted_vs_residual_csv(const DiagnosticsBundle& d) {
  std::string out = "fitted,residual\n";
  for (const auto& [fit, res] : d.fitted_residual) {
    out += csv::format_real(fit) + "," + csv::format_real(res) + "\n";
  }
  return out;
}

std::string qq_csv(const DiagnosticsBundle& d) {
  std::string out = "theoretical_quantile,sample_quantile\n";
  for (const auto& q : d.qq_points) {
    out += csv::format_real(q.theoretical) + "," + csv::format_real(q.sample) + "\n";
  }
  return out;
}

std::string influence_csv(const DiagnosticsBundle& d, std::span<const int> years) {
  std::string out = "index,year,studentized,leverage,cooks_d\n";
  for (std::size_t i = 0; i < d.leverage.size(); ++i) {
    out += std::to_string(i) + "," + (i < years.size() ? std::to_string(years[i]) : "") + "," +
           csv::format_real(d.studentized[i]) + "," + csv::format_real(d.leverage[i]) + "," +
           csv::format_real(d.cooks_d[i]) + "\n";
  }
  return out;
}

}  // namespace co2attr
