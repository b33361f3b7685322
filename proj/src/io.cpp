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

#include "wfk/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "wfk/errors.hpp"

namespace wfk {

namespace {

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string{};
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double v = 0.0;
  in >> v;
  if (in.fail() || !in.eof()) return std::nullopt;
  return v;
}

}  // namespace

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

void write_csv_metadata(std::ostream& out, const Metadata& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << '=' << value << '\n';
}

void write_curve_csv(std::ostream& out, const CoveringCurve& curve) {
  out << "eps,N,log_lower,log_upper,log_pack,log_cover,ratio\n";
  for (const CurveRow& row : curve.rows) {
    out << format_number(row.eps) << ',' << row.scale_index << ','
        << format_number(row.log_lower) << ',' << format_number(row.log_upper) << ','
        << optional_number(row.log_pack) << ',' << optional_number(row.log_cover) << ','
        << optional_number(row.ratio) << '\n';
  }
}

void write_dimension_csv(std::ostream& out, const DimensionEstimate& estimate) {
  out << "scale,count\n";
  for (std::size_t i = 0; i < estimate.scales.size(); ++i) {
    out << format_number(estimate.scales[i]) << ',' << format_number(estimate.counts[i])
        << '\n';
  }
}

void write_holder_csv(std::ostream& out, const HolderProbe& probe) {
  out << "h,max_quotient\n";
  for (std::size_t i = 0; i < probe.steps.size(); ++i) {
    out << format_number(probe.steps[i]) << ',' << format_number(probe.max_quotients[i])
        << '\n';
  }
}

nlohmann::json to_json(const KernelParams& params) {
  return {{"a", params.a()}, {"b", params.b()}};
}

nlohmann::json to_json(const CoveringCurve& curve) {
  nlohmann::json rows = nlohmann::json::array();
  for (const CurveRow& row : curve.rows) {
    rows.push_back({{"eps", row.eps},
                    {"N", row.scale_index},
                    {"log_lower", row.log_lower},
                    {"log_upper", row.log_upper},
                    {"log_pack", optional_json(row.log_pack)},
                    {"log_cover", optional_json(row.log_cover)},
                    {"ratio", optional_json(row.ratio)},
                    {"pairs", row.pairs},
                    {"tail_norm", row.tail_norm}});
  }
  return {{"rows", rows}};
}

nlohmann::json to_json(const DimensionEstimate& estimate) {
  return {{"dimension", estimate.dimension},
          {"raw_dimension", estimate.raw_dimension},
          {"slope", estimate.slope},
          {"residual", estimate.fit_residual},
          {"window", {estimate.levels.front(), estimate.levels.back()}},
          {"samples_per_column", estimate.samples_per_column},
          {"evaluations", estimate.evaluations},
          {"scales", estimate.scales},
          {"counts", estimate.counts}};
}

nlohmann::json to_json(const HolderProbe& probe) {
  return {{"exponent", probe.fitted_exponent},
          {"residual", probe.fit_residual},
          {"window", {probe.fit_from, probe.scales.back()}},
          {"probe_points", probe.probe_points},
          {"tail_quotient_ratio", probe.tail_quotient_ratio()},
          {"steps", probe.steps},
          {"max_increments", probe.max_increments},
          {"max_quotients", probe.max_quotients}};
}

nlohmann::json to_json(const KrrModel& model) {
  return {{"params", to_json(model.params)},
          {"centers", model.centers},
          {"weights", model.weights},
          {"ridge", model.ridge},
          {"tol", model.tol}};
}

KrrModel krr_model_from_json(const nlohmann::json& j) {
  try {
    const auto& p = j.at("params");
    KrrModel model{validate_params(p.at("a").get<double>(), p.at("b").get<long long>()),
                   j.at("centers").get<std::vector<double>>(),
                   j.at("weights").get<std::vector<double>>(), j.at("ridge").get<double>(),
                   j.value("tol", kDefaultTol)};
    if (model.centers.size() != model.weights.size()) {
      throw DomainError("model centers and weights differ in length");
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(fmt::format("malformed model JSON: {}", e.what()));
  }
}

std::vector<std::pair<double, double>> read_xy_csv(std::istream& in) {
  std::vector<std::pair<double, double>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto comma = t.find(',');
    const auto x = comma == std::string::npos ? std::nullopt : parse_double(trim(t.substr(0, comma)));
    const auto y = comma == std::string::npos ? std::nullopt : parse_double(trim(t.substr(comma + 1)));
    if (!x || !y) {
      const bool numeric_start = parse_double(trim(t.substr(0, comma))).has_value();
      if (!seen_data && !numeric_start) {
        seen_data = true;  // a single header line is allowed
        continue;
      }
      throw DomainError(fmt::format("line {}: expected 'x,y', got '{}'", line_no, t));
    }
    seen_data = true;
    rows.emplace_back(*x, *y);
  }
  return rows;
}

}  // namespace wfk
