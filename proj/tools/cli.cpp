/*
 * Copyright 2026 The wfk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "wfk/covering.hpp"
#include "wfk/errors.hpp"
#include "wfk/fractal.hpp"
#include "wfk/io.hpp"
#include "wfk/kernel.hpp"
#include "wfk/krr.hpp"
#include "wfk/rkhs.hpp"

namespace wfk::cli {

namespace {

using nlohmann::json;

/// Usage-level failure raised after parsing (bad files, bad flag combinations).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double a = 0.5;
  long long b = 3;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "csv";

  // eval, krr predict
  std::vector<double> x;
  std::vector<double> y;
  std::size_t terms = 0;

  // gram
  std::vector<double> points;
  std::size_t random_points = 0;

  // bounds, empirical, curve
  std::vector<double> eps;
  std::string determinant = "unit";
  std::size_t samples = 20000;
  std::size_t grid = kDefaultGridSize;
  std::size_t pairs = 0;
  std::string mode = "both";
  bool verify = false;
  bool no_pack = false;
  bool no_cover = false;

  // dimension
  int m_min = 5;
  int m_max = 12;
  std::size_t samples_per_column = 2048;
  std::size_t max_evaluations = 20'000'000;
  double series_tol = 1e-6;

  // holder
  int holder_m_max = 12;
  std::size_t holder_samples = 256;

  // krr
  std::string data;
  std::string model;
  std::optional<double> ridge;
};

struct Emitted {
  std::string body;
  std::string extension;
};

class Command {
 public:
  Command(std::string name, const RunConfig& cfg) : name_(std::move(name)), cfg_(cfg) {}

  Metadata metadata(const KernelParams& params) const {
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"command", name_},
            {"a", format_number(params.a())},
            {"b", std::to_string(params.b())},
            {"tol", format_number(cfg_.tol)},
            {"seed", std::to_string(cfg_.seed)}};
  }

  json envelope(const KernelParams& params, json results) const {
    json p = to_json(params);
    p["tol"] = cfg_.tol;
    return {{"tool", kToolName},   {"version", kToolVersion}, {"command", name_},
            {"params", p},         {"seed", cfg_.seed},       {"results", std::move(results)}};
  }

  bool json_format() const { return cfg_.format == "json"; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  const RunConfig& cfg_;
};

Emitted emit_csv(const Metadata& meta, const std::function<void(std::ostream&)>& body) {
  std::ostringstream os;
  write_csv_metadata(os, meta);
  body(os);
  return {os.str(), "csv"};
}

Emitted emit_json(const json& j) { return {j.dump(2) + "\n", "json"}; }

void add_meta(Metadata& meta, std::string key, double value) {
  meta.emplace_back(std::move(key), format_number(value));
}

void add_meta(Metadata& meta, std::string key, std::size_t value) {
  meta.emplace_back(std::move(key), std::to_string(value));
}

void warn_outside(const std::vector<double>& xs, const char* label, std::ostream& err) {
  for (double x : xs) {
    if (!in_unit_interval(x)) {
      err << fmt::format("warning: {} = {} lies outside [-1, 1]\n", label, format_number(x));
    }
  }
}

// ---------------------------------------------------------------- eval

Emitted cmd_eval(const RunConfig& cfg, const KernelParams& params, std::ostream& err) {
  if (cfg.x.empty()) throw UsageError("eval needs at least one --x value");
  if (!cfg.y.empty() && cfg.y.size() != 1 && cfg.y.size() != cfg.x.size()) {
    throw UsageError("--y must hold one value or as many values as --x");
  }
  warn_outside(cfg.x, "x", err);
  warn_outside(cfg.y, "y", err);
  const Command cmd("eval", cfg);
  const bool kernel = !cfg.y.empty();

  std::vector<double> values;
  for (std::size_t i = 0; i < cfg.x.size(); ++i) {
    const double x = cfg.x[i];
    const double y = kernel ? cfg.y[cfg.y.size() == 1 ? 0 : i] : 0.0;
    if (cfg.terms > 0) {
      values.push_back(kernel ? eval_kernel_terms(params, x, y, cfg.terms)
                              : eval_weierstrass_terms(params, x, cfg.terms));
    } else {
      values.push_back(kernel ? eval_kernel(params, x, y, cfg.tol)
                              : eval_weierstrass(params, x, cfg.tol));
    }
  }
  auto y_at = [&](std::size_t i) { return cfg.y[cfg.y.size() == 1 ? 0 : i]; };

  if (cmd.json_format()) {
    json rows = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      json row = {{"x", cfg.x[i]}, {"value", values[i]}};
      if (kernel) row["y"] = y_at(i);
      rows.push_back(row);
    }
    return emit_json(cmd.envelope(params, rows));
  }
  Metadata meta = cmd.metadata(params);
  if (cfg.terms > 0) add_meta(meta, "terms", cfg.terms);
  return emit_csv(meta, [&](std::ostream& os) {
    os << (kernel ? "x,y,value\n" : "x,value\n");
    for (std::size_t i = 0; i < values.size(); ++i) {
      os << format_number(cfg.x[i]) << ',';
      if (kernel) os << format_number(y_at(i)) << ',';
      os << format_number(values[i]) << '\n';
    }
  });
}

// ---------------------------------------------------------------- gram

Emitted cmd_gram(const RunConfig& cfg, const KernelParams& params) {
  if (cfg.points.empty() == (cfg.random_points == 0)) {
    throw UsageError("gram needs exactly one of --points or --random");
  }
  std::vector<double> pts = cfg.points;
  if (cfg.random_points > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    pts.resize(cfg.random_points);
    for (double& p : pts) p = unif(rng);
  }
  const Command cmd("gram", cfg);
  const GramMatrix g = gram_matrix(params, pts, cfg.tol);
  const Eigen::VectorXd ev = g.eigenvalues();
  const auto n = static_cast<std::size_t>(g.dim());

  if (cmd.json_format()) {
    json matrix = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) {
        row.push_back(g.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      }
      matrix.push_back(row);
    }
    std::vector<double> eig(ev.data(), ev.data() + ev.size());
    return emit_json(cmd.envelope(params, {{"points", pts},
                                           {"matrix", matrix},
                                           {"eigenvalues", eig},
                                           {"min_eigenvalue", ev(0)},
                                           {"max_eigenvalue", ev(ev.size() - 1)},
                                           {"psd_floor", g.psd_floor()},
                                           {"terms", g.terms}}));
  }
  Metadata meta = cmd.metadata(params);
  add_meta(meta, "points", n);
  add_meta(meta, "terms", g.terms);
  add_meta(meta, "min_eigenvalue", ev(0));
  add_meta(meta, "max_eigenvalue", ev(ev.size() - 1));
  add_meta(meta, "psd_floor", g.psd_floor());
  return emit_csv(meta, [&](std::ostream& os) {
    os << "i,j,x_i,x_j,value\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        os << i << ',' << j << ',' << format_number(pts[i]) << ',' << format_number(pts[j])
           << ','
           << format_number(
                  g.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))
           << '\n';
      }
    }
  });
}

// ---------------------------------------------------------- covering

std::vector<double> eps_or_default(const RunConfig& cfg) {
  if (!cfg.eps.empty()) return cfg.eps;
  return {kDefaultEpsList.begin(), kDefaultEpsList.end()};
}

RankRule rank_rule(const RunConfig& cfg) {
  RankRule rule;
  if (cfg.pairs > 0) {
    rule.kind = RankRule::Kind::Fixed;
    rule.fixed_pairs = cfg.pairs;
  }
  return rule;
}

Emitted emit_curve(const Command& cmd, const KernelParams& params, const CoveringCurve& curve,
                   Metadata extra) {
  if (cmd.json_format()) return emit_json(cmd.envelope(params, to_json(curve)));
  Metadata meta = cmd.metadata(params);
  meta.insert(meta.end(), extra.begin(), extra.end());
  return emit_csv(meta, [&](std::ostream& os) { write_curve_csv(os, curve); });
}

Emitted cmd_bounds(const RunConfig& cfg, const KernelParams& params) {
  if (cfg.determinant != "unit" && cfg.determinant != "scaled") {
    throw UsageError("--determinant must be 'unit' or 'scaled'");
  }
  const std::vector<double> eps = eps_or_default(cfg);
  CoveringCurve curve = covering_curve(params, eps, RankRule{}, EmpiricalBudget{}, cfg.seed);
  if (cfg.determinant == "scaled") {
    for (CurveRow& row : curve.rows) {
      row.log_lower = lower_bound_log(params, row.eps, DeterminantConvention::ScaledBasis);
    }
  }
  return emit_curve(Command("bounds", cfg), params, curve, {{"determinant", cfg.determinant}});
}

Emitted cmd_curve(const RunConfig& cfg, const KernelParams& params) {
  const std::vector<double> eps = eps_or_default(cfg);
  EmpiricalBudget budget;
  budget.sample_budget = cfg.samples;
  budget.grid_size = cfg.grid;
  budget.packing = !cfg.no_pack;
  budget.cover = !cfg.no_cover;
  const CoveringCurve curve = covering_curve(params, eps, rank_rule(cfg), budget, cfg.seed);
  Metadata extra;
  add_meta(extra, "samples", cfg.samples);
  add_meta(extra, "grid", cfg.grid);
  extra.emplace_back("pairs", cfg.pairs > 0 ? std::to_string(cfg.pairs) : "scale_index");
  return emit_curve(Command("curve", cfg), params, curve, std::move(extra));
}

Emitted cmd_empirical(const RunConfig& cfg, const KernelParams& params) {
  if (cfg.eps.empty()) throw UsageError("empirical needs --eps");
  if (cfg.mode != "pack" && cfg.mode != "cover" && cfg.mode != "both") {
    throw UsageError("--mode must be 'pack', 'cover' or 'both'");
  }
  const bool do_pack = cfg.mode != "cover";
  const bool do_cover = cfg.mode != "pack";
  const RankRule rule = rank_rule(cfg);
  const Command cmd("empirical", cfg);

  struct Row {
    double eps;
    std::size_t pairs;
    std::optional<PackingResult> pack;
    std::optional<CoverResult> cover;
    std::optional<double> min_separation;
  };
  std::vector<Row> rows;
  for (double eps : cfg.eps) {
    Row row{eps, rule.pairs_for(params, eps), {}, {}, {}};
    if (do_pack) {
      row.pack = greedy_packing(params, eps, row.pairs, cfg.grid, cfg.samples, cfg.seed);
      if (cfg.verify && row.pack->count > 1) {
        row.min_separation = min_pairwise_distance(params, *row.pack);
      }
    }
    if (do_cover) {
      row.cover = greedy_cover(params, eps, row.pairs, cfg.grid, cfg.samples, cfg.seed);
    }
    rows.push_back(std::move(row));
  }

  auto opt = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string{};
  };
  if (cmd.json_format()) {
    json out = json::array();
    for (const Row& r : rows) {
      json j = {{"eps", r.eps}, {"pairs", r.pairs}};
      if (r.pack) {
        j["pack_count"] = r.pack->count;
        j["log_pack"] = std::log(static_cast<double>(r.pack->count));
        j["separation"] = r.pack->separation;
      }
      if (r.cover) {
        j["cover_count"] = r.cover->count;
        j["log_cover"] = r.cover->log_count;
      }
      if (r.min_separation) j["min_separation"] = *r.min_separation;
      out.push_back(j);
    }
    return emit_json(cmd.envelope(params, {{"samples", cfg.samples},
                                           {"grid", cfg.grid},
                                           {"rows", out}}));
  }
  Metadata meta = cmd.metadata(params);
  add_meta(meta, "samples", cfg.samples);
  add_meta(meta, "grid", cfg.grid);
  meta.emplace_back("mode", cfg.mode);
  return emit_csv(meta, [&](std::ostream& os) {
    os << "eps,pairs,pack_count,log_pack,cover_count,log_cover,min_separation\n";
    for (const Row& r : rows) {
      os << format_number(r.eps) << ',' << r.pairs << ',';
      os << (r.pack ? std::to_string(r.pack->count) : "") << ','
         << (r.pack ? format_number(std::log(static_cast<double>(r.pack->count))) : "")
         << ',';
      os << (r.cover ? std::to_string(r.cover->count) : "") << ','
         << (r.cover ? format_number(r.cover->log_count) : "") << ',';
      os << opt(r.min_separation) << '\n';
    }
  });
}

// ------------------------------------------------------------- fractal

Emitted cmd_dimension(const RunConfig& cfg, const KernelParams& params) {
  BoxCountOptions options;
  options.m_min = cfg.m_min;
  options.m_max = cfg.m_max;
  options.samples_per_column = cfg.samples_per_column;
  options.max_evaluations = cfg.max_evaluations;
  options.tol = cfg.series_tol;
  const DimensionEstimate est = box_dimension(params, options);
  const Command cmd("dimension", cfg);
  if (cmd.json_format()) {
    json results = to_json(est);
    results["formula"] = graph_dimension_formula(params);
    return emit_json(cmd.envelope(params, results));
  }
  Metadata meta = cmd.metadata(params);
  add_meta(meta, "series_tol", cfg.series_tol);
  add_meta(meta, "m_min", static_cast<std::size_t>(cfg.m_min));
  add_meta(meta, "m_max", static_cast<std::size_t>(cfg.m_max));
  add_meta(meta, "samples_per_column", est.samples_per_column);
  add_meta(meta, "evaluations", est.evaluations);
  add_meta(meta, "dimension", est.dimension);
  add_meta(meta, "raw_dimension", est.raw_dimension);
  add_meta(meta, "fit_residual", est.fit_residual);
  add_meta(meta, "formula", graph_dimension_formula(params));
  return emit_csv(meta, [&](std::ostream& os) { write_dimension_csv(os, est); });
}

Emitted cmd_holder(const RunConfig& cfg, const KernelParams& params) {
  const HolderProbe probe =
      holder_probe(params, cfg.holder_m_max, cfg.holder_samples, cfg.seed, cfg.tol);
  const Command cmd("holder", cfg);
  const double expected = params.holder_exponent();
  if (cmd.json_format()) {
    json results = to_json(probe);
    results["expected"] = expected;
    return emit_json(cmd.envelope(params, results));
  }
  Metadata meta = cmd.metadata(params);
  add_meta(meta, "probe_points", probe.probe_points);
  add_meta(meta, "exponent", probe.fitted_exponent);
  add_meta(meta, "expected", expected);
  add_meta(meta, "fit_residual", probe.fit_residual);
  add_meta(meta, "tail_quotient_ratio", probe.tail_quotient_ratio());
  return emit_csv(meta, [&](std::ostream& os) { write_holder_csv(os, probe); });
}

// ----------------------------------------------------------------- krr

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot open '{}'", path));
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(fmt::format("'{}' is not valid JSON: {}", path, e.what()));
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError(fmt::format("cannot write '{}'", path));
  out << text;
}

Emitted cmd_krr_fit(const RunConfig& cfg, const KernelParams& params) {
  if (cfg.data.empty()) throw UsageError("krr fit needs --data");
  std::ifstream in(cfg.data);
  if (!in) throw UsageError(fmt::format("cannot open '{}'", cfg.data));
  const auto rows = read_xy_csv(in);
  std::vector<double> xs, ys;
  for (const auto& [x, y] : rows) {
    xs.push_back(x);
    ys.push_back(y);
  }
  const double ridge = cfg.ridge.value_or(default_ridge(params));
  const KrrModel model = fit(params, xs, ys, ridge, cfg.tol);
  const Command cmd("krr fit", cfg);
  const json model_json = cmd.envelope(params, to_json(model));
  if (!cfg.model.empty()) write_file(cfg.model, model_json.dump(2) + "\n");
  if (cmd.json_format()) return emit_json(model_json);

  Metadata meta = cmd.metadata(params);
  add_meta(meta, "ridge", ridge);
  add_meta(meta, "points", xs.size());
  add_meta(meta, "rkhs_norm", rkhs_norm(model));
  return emit_csv(meta, [&](std::ostream& os) {
    os << "x,y,fitted\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      os << format_number(xs[i]) << ',' << format_number(ys[i]) << ','
         << format_number(predict(model, xs[i])) << '\n';
    }
  });
}

Emitted cmd_krr_predict(RunConfig cfg, std::ostream& err) {
  if (cfg.model.empty()) throw UsageError("krr predict needs --model");
  if (cfg.x.empty()) throw UsageError("krr predict needs at least one --x value");
  json j = read_json_file(cfg.model);
  if (j.contains("results")) j = j.at("results");
  const KrrModel model = krr_model_from_json(j);
  cfg.a = model.params.a();
  cfg.b = static_cast<long long>(model.params.b());
  cfg.tol = model.tol;
  warn_outside(cfg.x, "x", err);
  const Command cmd("krr predict", cfg);
  std::vector<double> values;
  for (double x : cfg.x) values.push_back(predict(model, x));
  if (cmd.json_format()) {
    json rows = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      rows.push_back({{"x", cfg.x[i]}, {"value", values[i]}});
    }
    return emit_json(cmd.envelope(model.params, rows));
  }
  Metadata meta = cmd.metadata(model.params);
  meta.emplace_back("model", cfg.model);
  return emit_csv(meta, [&](std::ostream& os) {
    os << "x,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      os << format_number(cfg.x[i]) << ',' << format_number(values[i]) << '\n';
    }
  });
}

// -------------------------------------------------------------- output

void deliver(const RunConfig& cfg, const std::string& command, const Emitted& emitted,
             std::ostream& out) {
  std::string path = cfg.output;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      std::string stem = command;
      std::replace(stem.begin(), stem.end(), ' ', '_');
      path = (std::filesystem::path(dir) / (stem + "." + emitted.extension)).string();
    }
  }
  if (path.empty() || path == "-") {
    out << emitted.body;
    out.flush();
    return;
  }
  write_file(path, emitted.body);
}

void add_common(CLI::App& app, RunConfig& cfg) {
  app.add_option("--a", cfg.a, "Amplitude ratio a in (0, 1)")->capture_default_str();
  app.add_option("--b", cfg.b, "Integer frequency base b with a*b >= 1")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Series truncation tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--output,-o", cfg.output, "Output file ('-' for standard output)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Weierstrass fractal kernel toolkit"};
  app.name("wfk");
  app.set_version_flag("--version", std::string(kToolVersion));
  app.set_config("--config", "", "TOML or INI file; keys mirror flag names");
  app.require_subcommand(1);
  app.fallthrough();
  add_common(app, cfg);

  auto* eval = app.add_subcommand("eval", "Evaluate w(x), or W(x, y) when --y is given");
  eval->add_option("--x", cfg.x, "Abscissae")->delimiter(',');
  eval->add_option("--y", cfg.y, "Second kernel argument(s)")->delimiter(',');
  eval->add_option("--terms", cfg.terms, "Fixed number of series terms (overrides --tol)");

  auto* gram = app.add_subcommand("gram", "Gram matrix and eigenvalue summary");
  gram->add_option("--points", cfg.points, "Points in [-1, 1]")->delimiter(',');
  gram->add_option("--random", cfg.random_points, "Number of uniform random points");

  auto* bounds = app.add_subcommand("bounds", "Theoretical covering-number bounds");
  bounds->add_option("--eps", cfg.eps, "Strictly decreasing eps values")->delimiter(',');
  bounds->add_option("--determinant", cfg.determinant, "Lower-bound determinant: unit|scaled")
      ->capture_default_str();

  auto* empirical = app.add_subcommand("empirical", "Greedy packing and cover at given eps");
  empirical->add_option("--eps", cfg.eps, "eps values")->delimiter(',');
  empirical->add_option("--samples", cfg.samples, "Unit-ball samples")->capture_default_str();
  empirical->add_option("--grid", cfg.grid, "Sup-norm grid size")->capture_default_str();
  empirical->add_option("--pairs", cfg.pairs, "Fixed coefficient pairs (0: scale index)");
  empirical->add_option("--mode", cfg.mode, "pack|cover|both")->capture_default_str();
  empirical->add_flag("--verify", cfg.verify, "Re-evaluate the minimum packing separation");

  auto* curve = app.add_subcommand("curve", "Bounds plus empirical log-counts per eps");
  curve->add_option("--eps", cfg.eps, "Strictly decreasing eps values")->delimiter(',');
  curve->add_option("--samples", cfg.samples, "Unit-ball samples (0: bounds only)")
      ->capture_default_str();
  curve->add_option("--grid", cfg.grid, "Sup-norm grid size")->capture_default_str();
  curve->add_option("--pairs", cfg.pairs, "Fixed coefficient pairs (0: scale index)");
  curve->add_flag("--no-pack", cfg.no_pack, "Skip packing");
  curve->add_flag("--no-cover", cfg.no_cover, "Skip greedy cover");

  auto* dimension = app.add_subcommand("dimension", "Box-counting dimension of the graph");
  dimension->add_option("--m-min", cfg.m_min, "Coarsest level")->capture_default_str();
  dimension->add_option("--m-max", cfg.m_max, "Finest level")->capture_default_str();
  dimension->add_option("--samples-per-column", cfg.samples_per_column)->capture_default_str();
  dimension->add_option("--max-evaluations", cfg.max_evaluations)->capture_default_str();
  dimension->add_option("--series-tol", cfg.series_tol)->capture_default_str();

  auto* holder = app.add_subcommand("holder", "Hoelder exponent probe");
  holder->add_option("--m-max", cfg.holder_m_max, "Finest step b^-m")->capture_default_str();
  holder->add_option("--samples", cfg.holder_samples, "Random probe points")
      ->capture_default_str();

  auto* krr = app.add_subcommand("krr", "Kernel ridge regression");
  krr->require_subcommand(1);
  auto* krr_fit = krr->add_subcommand("fit", "Fit on an x,y CSV file");
  krr_fit->add_option("--data", cfg.data, "Training CSV (x,y)");
  krr_fit->add_option("--ridge", cfg.ridge, "Ridge (default 1e-8/(1-a))");
  krr_fit->add_option("--model", cfg.model, "Also save the model JSON here");
  auto* krr_predict = krr->add_subcommand("predict", "Evaluate a saved model");
  krr_predict->add_option("--model", cfg.model, "Model JSON from 'krr fit'");
  krr_predict->add_option("--x", cfg.x, "Abscissae")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string command;
    Emitted emitted;
    if (krr->parsed()) {
      command = krr_fit->parsed() ? "krr fit" : "krr predict";
      if (krr_predict->parsed()) {
        emitted = cmd_krr_predict(cfg, err);
        deliver(cfg, command, emitted, out);
        return kExitOk;
      }
    }
    const KernelParams params = validate_params(cfg.a, cfg.b);
    if (!(cfg.tol > 0.0)) throw DomainError("--tol must be positive");
    if (eval->parsed()) {
      command = "eval";
      emitted = cmd_eval(cfg, params, err);
    } else if (gram->parsed()) {
      command = "gram";
      emitted = cmd_gram(cfg, params);
    } else if (bounds->parsed()) {
      command = "bounds";
      emitted = cmd_bounds(cfg, params);
    } else if (empirical->parsed()) {
      command = "empirical";
      emitted = cmd_empirical(cfg, params);
    } else if (curve->parsed()) {
      command = "curve";
      emitted = cmd_curve(cfg, params);
    } else if (dimension->parsed()) {
      command = "dimension";
      emitted = cmd_dimension(cfg, params);
    } else if (holder->parsed()) {
      command = "holder";
      emitted = cmd_holder(cfg, params);
    } else {
      emitted = cmd_krr_fit(cfg, params);
    }
    deliver(cfg, command, emitted, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InfeasibleTruncation& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace wfk::cli
