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

#ifndef WFK_IO_HPP
#define WFK_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wfk/covering.hpp"
#include "wfk/fractal.hpp"
#include "wfk/krr.hpp"

namespace wfk {

inline constexpr const char* kToolName = "wfk";
inline constexpr const char* kToolVersion = WFK_VERSION;

/// 17 significant digits: round-trips every double.
std::string format_number(double value);

/// Ordered key/value pairs written ahead of every output.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// "# key=value" lines.
void write_csv_metadata(std::ostream& out, const Metadata& meta);

/// Header eps,N,log_lower,log_upper,log_pack,log_cover,ratio; absent fields empty.
void write_curve_csv(std::ostream& out, const CoveringCurve& curve);
void write_dimension_csv(std::ostream& out, const DimensionEstimate& estimate);
void write_holder_csv(std::ostream& out, const HolderProbe& probe);

nlohmann::json to_json(const KernelParams& params);
nlohmann::json to_json(const CoveringCurve& curve);
nlohmann::json to_json(const DimensionEstimate& estimate);
nlohmann::json to_json(const HolderProbe& probe);
nlohmann::json to_json(const KrrModel& model);

/// Inverse of to_json(KrrModel); validates params on the way in.
KrrModel krr_model_from_json(const nlohmann::json& j);

/// Reads "x,y" lines. Blank lines, '#' comments and a non-numeric header are skipped.
std::vector<std::pair<double, double>> read_xy_csv(std::istream& in);

}  // namespace wfk

#endif  // WFK_IO_HPP
