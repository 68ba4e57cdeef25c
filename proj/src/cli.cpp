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

#include "co2attr/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "co2attr/csv.hpp"
#include "co2attr/design.hpp"
#include "co2attr/error.hpp"
#include "co2attr/quadform.hpp"
#include "co2attr/regress.hpp"
#include "co2attr/transform.hpp"

namespace co2attr::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kModule = "cli";

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> long_names_of(const std::vector<std::string>& keys) {
  std::vector<std::string> out;
  for (const auto& k : keys) out.push_back(factor_spec(k).long_name);
  return out;
}

std::vector<Term> resolve_terms(const RunConfig& cfg, const Dataset& ds,
                                std::span<const double> z) {
  const auto names = ds.predictor_names();
  std::vector<Term> terms;
  if (!cfg.terms.empty()) {
    for (const auto& label : cfg.terms) terms.push_back(parse_term(label, names));
    return terms;
  }
  if (!cfg.model_path.empty()) {
    Json model;
    try {
      model = Json::parse(read_file(cfg.model_path));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, kModule,
                  "cannot read model file '" + cfg.model_path + "': " + e.what());
    }
    if (!model.contains("fit") || !model["fit"].contains("terms")) {
      throw Error(ErrorCode::ParseError, kModule, "model file has no fit.terms array");
    }
    for (const auto& label : model["fit"]["terms"]) {
      const std::string s = label.get<std::string>();
      if (s != "Intercept") terms.push_back(parse_term(s, names));
    }
    return terms;
  }
  const auto candidates = enumerate_terms(static_cast<int>(ds.k()));
  return forward_select(ds, z, candidates, cfg.alpha_enter).selected_terms();
}

Json dataset_summary(const Dataset& ds) {
  return Json{{"n", ds.n()},
              {"first_year", ds.years.front()},
              {"last_year", ds.years.back()},
              {"excluded_years", ds.excluded_years},
              {"countries", ds.region.size()},
              {"factors", ds.predictor_names()}};
}

std::vector<std::string> input_paths(const std::string& command, const RunConfig& cfg) {
  if (command == "contrib") return {cfg.emissions_path};
  if (command == "compare") return {cfg.ranking_a, cfg.ranking_b};
  std::vector<std::string> paths{cfg.emissions_path, cfg.response_path};
  if (command == "validate" && cfg.terms.empty() && !cfg.model_path.empty()) {
    paths.push_back(cfg.model_path);
  }
  return paths;
}

}  // namespace

FactorSpec factor_spec(const std::string& key) {
  static const std::vector<FactorSpec> registry{
      {"solid", "Solid Fuel", "So", "Solid"},
      {"liquid", "Liquid Fuel", "Li", "Liquid"},
      {"gas", "Gas Fuel", "Ga", "Gas"},
      {"cement", "Cement", "Ce", "Cement"},
      {"flares", "Gas Flaring", "Fl", "Gas Flares"},
      {"bunker", "Bunker fuels", "Bu", "Bunker"},
      {"total", "Total Fossil Fuel Emissions", "To", "Total"},
  };
  for (const auto& f : registry) {
    if (f.key == key) return f;
  }
  return {key, key, key, key};
}

Json to_json(const RunConfig& cfg) {
  return Json{{"emissions", cfg.emissions_path},
              {"response", cfg.response_path},
              {"factors", cfg.factors},
              {"countries", cfg.countries},
              {"exclude_years", cfg.excluded_years},
              {"lambda", cfg.lambda},
              {"alpha_enter", cfg.alpha_enter},
              {"normality_alpha", cfg.normality_alpha},
              {"k_folds", cfg.k_folds},
              {"seed", cfg.seed},
              {"out_dir", cfg.out_dir},
              {"config", cfg.config_path},
              {"terms", cfg.terms},
              {"model", cfg.model_path},
              {"factor", cfg.factor},
              {"year", cfg.year},
              {"ranking_a", cfg.ranking_a},
              {"ranking_b", cfg.ranking_b},
              {"headers", cfg.compare_headers}};
}

std::string read_file(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::FileNotFound, kModule, "no input file given");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, kModule, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EmissionsTable load_emissions(const std::string& path, const std::vector<std::string>& factors) {
  const std::string text = read_file(path);
  const csv::Document doc = csv::parse(text);

  EmissionsSchema schema;
  if (doc.column("factor") && doc.column("value")) schema = EmissionsSchema::long_format();
  schema.country_column = doc.column("country") ? "country" : "Nation";
  schema.year_column = "year";
  if (!schema.is_long()) {
    for (const auto& key : factors) schema.factor_columns.emplace_back(key, factor_spec(key).header);
  }
  return parse_emissions_csv(text, schema);
}

Dataset load_dataset(const RunConfig& cfg) {
  const EmissionsTable em = load_emissions(cfg.emissions_path, cfg.factors);
  RegionAggregate agg = aggregate_region(em, cfg.countries, cfg.factors, {});
  for (auto& s : agg.series) s.factor = factor_spec(s.factor).label;
  const ResponseSeries resp = parse_response_csv(read_file(cfg.response_path));
  return join_dataset(agg, resp, cfg.excluded_years);
}

CommandResult run_fit(const RunConfig& cfg) {
  CommandResult out;
  const Dataset ds = load_dataset(cfg);
  const PowerTransform t{cfg.lambda};
  const std::vector<double> z = power_transform(ds.response, t);

  Json normality{{"lambda", cfg.lambda}};
  try {
    normality["lambda_mle"] = box_cox_profile_lambda(ds.response);
    normality["response"] = to_json(normality_check(ds.response, cfg.normality_alpha));
    const NormalityReport rep = normality_check(z, cfg.normality_alpha);
    normality["transformed"] = to_json(rep);
    if (!rep.passed) {
      out.warnings.push_back("transformed response fails the normality check (p = " +
                             csv::format_real(rep.p_value) + "); continuing with fixed lambda");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SampleTooSmall && e.code() != ErrorCode::DegenerateSample) throw;
    out.warnings.push_back(std::string("normality check skipped: ") + e.what());
  }

  const auto candidates = enumerate_terms(static_cast<int>(ds.k()));
  const SelectionTrace trace = forward_select(ds, z, candidates, cfg.alpha_enter);
  const GofStats gof = goodness_of_fit(trace.final_fit);
  const QuadraticForm qf =
      assemble(trace.final_fit, static_cast<int>(ds.k()), ds.predictor_names());

  RankingTable table;
  if (trace.steps.empty()) {
    out.warnings.push_back("no candidate term met alpha_enter = " +
                           csv::format_real(cfg.alpha_enter) + "; selection is empty");
  } else {
    table = ranking(trace, long_names_of(cfg.factors));
  }

  Json model{{"transform", {{"lambda", cfg.lambda}}},
             {"dataset", dataset_summary(ds)},
             {"selection", to_json(trace)},
             {"fit", to_json(trace.final_fit, gof)},
             {"quadratic_form", to_json(qf)},
             {"warnings", out.warnings}};
  out.files["model.json"] = dump(model);
  out.files["ranking.csv"] = to_csv(table);
  out.files["ranking.md"] = to_markdown(table);
  out.files["normality.json"] = dump(normality);
  return out;
}

CommandResult run_validate(const RunConfig& cfg) {
  CommandResult out;
  const Dataset ds = load_dataset(cfg);
  const PowerTransform t{cfg.lambda};
  const std::vector<double> z = power_transform(ds.response, t);
  const std::vector<Term> terms = resolve_terms(cfg, ds, z);

  const CrossValReport cv = cfg.k_folds == 0
                                ? loo_cross_validate(ds, terms, t)
                                : k_fold_cross_validate(ds, terms, t, cfg.k_folds, cfg.seed);
  const FitResult fit = fit_ols(build_design_matrix(ds, terms, true), z);
  const DiagnosticsBundle diag = residual_diagnostics(fit);

  Json report = to_json(cv);
  Json labels = Json::array();
  for (const auto& term : terms) labels.push_back(term_label(term, ds.predictor_names()));
  report["terms"] = std::move(labels);
  report["scheme"] = cfg.k_folds == 0 ? "leave-one-out" : "k-fold";

  out.files["crossval.json"] = dump(report);
  out.files["fitted_vs_residual.csv"] = fitted_vs_residual_csv(diag);
  out.files["qq.csv"] = qq_csv(diag);
  out.files["influence.csv"] = influence_csv(diag, ds.years);
  return out;
}

CommandResult run_contrib(const RunConfig& cfg) {
  CommandResult out;
  const EmissionsTable em = load_emissions(cfg.emissions_path, {cfg.factor});
  const ContributionTable table = country_contributions(em, cfg.factor, cfg.year, cfg.countries);
  const std::string stem = "contrib_" + cfg.factor + "_" + std::to_string(cfg.year);
  out.files[stem + ".csv"] = to_csv(table);
  out.files[stem + ".json"] = dump(to_json(table));
  return out;
}

ComparisonTable compare_rankings(const RankingTable& a, const RankingTable& b) {
  ComparisonTable t;
  const std::size_t len = std::max(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < len; ++i) {
    t.rows.push_back({static_cast<int>(i + 1), i < a.rows.size() ? a.rows[i].name : "",
                      i < b.rows.size() ? b.rows[i].name : ""});
  }
  return t;
}

std::string to_csv(const ComparisonTable& t, const std::vector<std::string>& headers) {
  std::string out = csv::join({"rank", headers.at(0), headers.at(1)}) + "\n";
  for (const auto& r : t.rows) {
    out += csv::join({std::to_string(r.rank), r.label_a, r.label_b}) + "\n";
  }
  return out;
}

std::string to_markdown(const ComparisonTable& t, const std::vector<std::string>& headers) {
  std::string out = "| Rank | " + headers.at(0) + " | " + headers.at(1) + " |\n|---:|---|---|\n";
  for (const auto& r : t.rows) {
    out += "| " + std::to_string(r.rank) + " | " + r.label_a + " | " + r.label_b + " |\n";
  }
  return out;
}

CommandResult run_compare(const RunConfig& cfg) {
  if (cfg.compare_headers.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, kModule, "compare needs exactly two column headers");
  }
  CommandResult out;
  const RankingTable a = parse_ranking_csv(read_file(cfg.ranking_a));
  const RankingTable b = parse_ranking_csv(read_file(cfg.ranking_b));
  const ComparisonTable t = compare_rankings(a, b);
  out.files["comparison.csv"] = to_csv(t, cfg.compare_headers);
  out.files["comparison.md"] = to_markdown(t, cfg.compare_headers);
  return out;
}

CommandResult run_ingest_check(const RunConfig& cfg) {
  CommandResult out;
  const EmissionsTable em = load_emissions(cfg.emissions_path, cfg.factors);
  const RegionAggregate agg = aggregate_region(em, cfg.countries, cfg.factors, {});
  Json missing = Json::object();
  for (const auto& s : agg.series) {
    Json per_year = Json::object();
    for (std::size_t y = 0; y < agg.years.size(); ++y) {
      if (s.missing[y] > 0) per_year[std::to_string(agg.years[y])] = s.missing[y];
    }
    missing[factor_spec(s.factor).label] = std::move(per_year);
  }
  RegionAggregate labelled = agg;
  for (auto& s : labelled.series) s.factor = factor_spec(s.factor).label;
  const Dataset ds = join_dataset(labelled, parse_response_csv(read_file(cfg.response_path)),
                                  cfg.excluded_years);
  Json summary{{"records", em.size()},
               {"dataset", dataset_summary(ds)},
               {"years", ds.years},
               {"missing_records", std::move(missing)}};
  out.files["ingest.json"] = dump(summary);
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::InvalidArgument, kModule, "SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

int execute(const std::string& command, const RunConfig& cfg, std::ostream& out,
            std::ostream& err) {
  try {
    CommandResult result;
    if (command == "fit") {
      result = run_fit(cfg);
    } else if (command == "validate") {
      result = run_validate(cfg);
    } else if (command == "contrib") {
      result = run_contrib(cfg);
    } else if (command == "compare") {
      result = run_compare(cfg);
    } else if (command == "ingest-check") {
      result = run_ingest_check(cfg);
    } else {
      throw Error(ErrorCode::InvalidArgument, kModule, "unknown command '" + command + "'");
    }

    Json inputs = Json::object();
    for (const auto& path : input_paths(command, cfg)) inputs[path] = sha256_hex(read_file(path));
    Json outputs = Json::array();
    for (const auto& [name, content] : result.files) outputs.push_back(name);
    outputs.push_back("run-manifest.json");
    result.files["run-manifest.json"] = dump(Json{{"command", command},
                                                  {"config", to_json(cfg)},
                                                  {"inputs", std::move(inputs)},
                                                  {"outputs", std::move(outputs)}});

    fs::create_directories(cfg.out_dir);
    for (const auto& [name, content] : result.files) {
      const fs::path path = fs::path(cfg.out_dir) / name;
      std::ofstream f(path, std::ios::binary);
      if (!f) throw Error(ErrorCode::FileNotFound, kModule, "cannot write '" + path.string() + "'");
      f << content;
      out << "wrote " << path.string() << "\n";
    }
    for (const auto& w : result.warnings) {
      err << dump(Json{{"warning", w}});
    }
    return 0;
  } catch (const Error& e) {
    err << dump(Json{{"error",
                      {{"module", e.module()},
                       {"code", std::string(to_string(e.code()))},
                       {"message", e.what()}}}});
  } catch (const std::exception& e) {
    err << dump(Json{{"error", {{"module", kModule}, {"code", "Internal"}, {"message", e.what()}}}});
  }
  return 1;
}

}  // namespace co2attr::cli
