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

#include <CLI11.hpp>
#include <iostream>

#include "co2attr/cli.hpp"

int main(int argc, char** argv) {
  using co2attr::cli::RunConfig;
  RunConfig cfg;

  CLI::App app{"co2attr: atmospheric CO2 attribution by second-order stepwise regression"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with option defaults; flags take precedence")
      ->check(CLI::ExistingFile);

  app.add_option("--emissions", cfg.emissions_path, "Emissions CSV (wide or long format)");
  app.add_option("--response", cfg.response_path, "Atmospheric CO2 CSV (year,co2_ppmv)");
  app.add_option("--factors", cfg.factors, "Factor keys, e.g. liquid,gas,flares,bunker")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--countries", cfg.countries, "Countries to aggregate (default: all in file)")
      ->delimiter(',');
  app.add_option("--exclude-years", cfg.excluded_years, "Years dropped from the join")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--lambda", cfg.lambda, "Response power-transform exponent")
      ->capture_default_str();
  app.add_option("--alpha-enter", cfg.alpha_enter, "Stepwise entry significance level")
      ->capture_default_str();
  app.add_option("--normality-alpha", cfg.normality_alpha, "Normality test significance level")
      ->capture_default_str();
  app.add_option("--k-folds", cfg.k_folds, "Cross-validation folds (0: leave-one-out)")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Fold shuffle seed")->capture_default_str();
  app.add_option("--out-dir", cfg.out_dir, "Output directory")->capture_default_str();

  auto* fit = app.add_subcommand("fit", "Select and fit the second-order model");
  auto* validate = app.add_subcommand("validate", "Cross-validate a model and export diagnostics");
  validate->add_option("--terms", cfg.terms, "Model terms by label, e.g. Ga,Ga:Bu,Li^2")
      ->delimiter(',');
  validate->add_option("--model", cfg.model_path, "model.json from a previous fit");
  auto* contrib = app.add_subcommand("contrib", "Country contributions to one factor in one year");
  contrib->add_option("--factor", cfg.factor, "Factor key")->capture_default_str();
  contrib->add_option("--year", cfg.year, "Year")->capture_default_str();
  auto* compare = app.add_subcommand("compare", "Side-by-side comparison of two ranking files");
  compare->add_option("ranking_a", cfg.ranking_a, "First ranking.csv")->required();
  compare->add_option("ranking_b", cfg.ranking_b, "Second ranking.csv")->required();
  compare->add_option("--headers", cfg.compare_headers, "Column headers for the two rankings")
      ->delimiter(',')
      ->expected(2);
  auto* ingest = app.add_subcommand("ingest-check", "Parse, aggregate and join the inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (auto* opt = app.get_config_ptr(); opt && opt->count() > 0) {
    cfg.config_path = opt->as<std::string>();
  }

  std::string command;
  for (auto* sub : {fit, validate, contrib, compare, ingest}) {
    if (sub->parsed()) command = sub->get_name();
  }
  return co2attr::cli::execute(command, cfg, std::cout, std::cerr);
}
