// Copyright 2026 The quip developers
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

#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quip/circuit.hpp"
#include "quip/compress.hpp"
#include "quip/simulate.hpp"

namespace quip {

/// One CLI invocation's worth of numbers, serialized as versioned JSON.
/// Wall times live in their own object so everything else stays
/// deterministic for fixed inputs.
struct MetricsRecord {
  int schema = 1;
  std::string input;
  std::string mapping;
  unsigned position_qubits = 0;
  unsigned color_qubits = 0;
  unsigned bit_depth = 0;
  std::size_t original_pixels = 0;
  std::size_t padded_pixels = 0;
  double compression_percent = 0.0;
  GateCounts gates;
  std::vector<CompressionReport> compression_planes;
  std::optional<QualityMetrics> quality;
  std::map<std::string, double> wall_ms;
};

namespace detail {

// Infinity has no JSON number form; encode it as the string "inf" so the
// record round-trips.
inline nlohmann::json json_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

inline double real_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::invalid_argument("unrecognized real encoding: " + s);
  }
  return j.get<double>();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const GateCounts& counts) {
  j = nlohmann::json{{"ry", counts.ry},     {"cnot", counts.cnot},
                     {"h", counts.h},       {"x", counts.x},
                     {"mcry", counts.mcry}, {"total_qubits", counts.total_qubits}};
}

inline void from_json(const nlohmann::json& j, GateCounts& counts) {
  j.at("ry").get_to(counts.ry);
  j.at("cnot").get_to(counts.cnot);
  j.at("h").get_to(counts.h);
  j.at("x").get_to(counts.x);
  j.at("mcry").get_to(counts.mcry);
  j.at("total_qubits").get_to(counts.total_qubits);
}

inline void to_json(nlohmann::json& j, const CompressionReport& report) {
  j = nlohmann::json{{"level_percent", report.level_percent},
                     {"coefficients_total", report.coefficients_total},
                     {"coefficients_kept", report.coefficients_kept},
                     {"ry_removed", report.ry_removed},
                     {"cnot_removed", report.cnot_removed},
                     {"threshold_magnitude", report.threshold_magnitude}};
}

inline void from_json(const nlohmann::json& j, CompressionReport& report) {
  j.at("level_percent").get_to(report.level_percent);
  j.at("coefficients_total").get_to(report.coefficients_total);
  j.at("coefficients_kept").get_to(report.coefficients_kept);
  j.at("ry_removed").get_to(report.ry_removed);
  j.at("cnot_removed").get_to(report.cnot_removed);
  j.at("threshold_magnitude").get_to(report.threshold_magnitude);
}

inline void to_json(nlohmann::json& j, const QualityMetrics& quality) {
  j = nlohmann::json::object();
  if (!std::isnan(quality.max_amp_error)) j["max_amp_error"] = detail::json_real(quality.max_amp_error);
  if (!std::isnan(quality.fidelity)) j["fidelity"] = detail::json_real(quality.fidelity);
  if (!std::isnan(quality.psnr_db)) j["psnr_db"] = detail::json_real(quality.psnr_db);
  if (!std::isnan(quality.mse)) j["mse"] = detail::json_real(quality.mse);
}

inline void from_json(const nlohmann::json& j, QualityMetrics& quality) {
  if (j.contains("max_amp_error")) quality.max_amp_error = detail::real_from_json(j["max_amp_error"]);
  if (j.contains("fidelity")) quality.fidelity = detail::real_from_json(j["fidelity"]);
  if (j.contains("psnr_db")) quality.psnr_db = detail::real_from_json(j["psnr_db"]);
  if (j.contains("mse")) quality.mse = detail::real_from_json(j["mse"]);
}

inline void to_json(nlohmann::json& j, const MetricsRecord& record) {
  j = nlohmann::json{{"schema", record.schema},
                     {"input", record.input},
                     {"mapping", record.mapping},
                     {"position_qubits", record.position_qubits},
                     {"color_qubits", record.color_qubits},
                     {"bit_depth", record.bit_depth},
                     {"original_pixels", record.original_pixels},
                     {"padded_pixels", record.padded_pixels},
                     {"compression_percent", record.compression_percent},
                     {"gates", record.gates},
                     {"compression_planes", record.compression_planes},
                     {"wall_ms", record.wall_ms}};
  if (record.quality) j["quality"] = *record.quality;
}

inline void from_json(const nlohmann::json& j, MetricsRecord& record) {
  j.at("schema").get_to(record.schema);
  j.at("input").get_to(record.input);
  j.at("mapping").get_to(record.mapping);
  j.at("position_qubits").get_to(record.position_qubits);
  j.at("color_qubits").get_to(record.color_qubits);
  j.at("bit_depth").get_to(record.bit_depth);
  j.at("original_pixels").get_to(record.original_pixels);
  j.at("padded_pixels").get_to(record.padded_pixels);
  j.at("compression_percent").get_to(record.compression_percent);
  j.at("gates").get_to(record.gates);
  j.at("compression_planes").get_to(record.compression_planes);
  j.at("wall_ms").get_to(record.wall_ms);
  if (j.contains("quality")) record.quality = j["quality"].get<QualityMetrics>();
}

inline std::string metrics_json(const MetricsRecord& record) {
  return nlohmann::json(record).dump(2) + "\n";
}

}  // namespace quip
