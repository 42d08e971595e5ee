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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "quip/synthesis.hpp"

namespace quip {

/// Outcome of compressing one coefficient plane. coefficients_kept counts
/// the nonzero coefficients remaining, which is exactly the RY count the
/// compressed fragment synthesizes; cnot_removed is filled in once the
/// fragment has been built.
struct CompressionReport {
  double level_percent = 0.0;
  std::size_t coefficients_total = 0;
  std::size_t coefficients_kept = 0;
  std::size_t ry_removed = 0;
  std::size_t cnot_removed = 0;
  double threshold_magnitude = 0.0;

  bool operator==(const CompressionReport&) const = default;
};

/// Zeroes the floor(level/100 * 2^n) smallest-magnitude coefficients in
/// place. Ties break toward the lower index, so exact zeros are consumed
/// first; level 0 therefore zeroes nothing but still reports pre-existing
/// exact zeros as removed rotations.
inline CompressionReport compress_coefficients(AngleVector& theta_hat, double level_percent) {
  if (theta_hat.domain != AngleDomain::walsh) {
    throw std::invalid_argument("compression expects a walsh-domain vector");
  }
  if (!(level_percent >= 0.0 && level_percent <= 100.0)) {
    throw std::domain_error("compression level must lie in [0, 100]");
  }
  auto& values = theta_hat.values;
  const std::size_t total = values.size();
  const std::size_t zero_count =
      static_cast<std::size_t>(std::floor(level_percent / 100.0 * static_cast<double>(total)));

  CompressionReport report;
  report.level_percent = level_percent;
  report.coefficients_total = total;

  if (zero_count > 0) {
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double ma = std::abs(values[a]);
      const double mb = std::abs(values[b]);
      return ma != mb ? ma < mb : a < b;
    });
    for (std::size_t i = 0; i < zero_count; ++i) {
      report.threshold_magnitude = std::max(report.threshold_magnitude, std::abs(values[order[i]]));
      values[order[i]] = 0.0;
    }
  }

  report.coefficients_kept =
      static_cast<std::size_t>(std::count_if(values.begin(), values.end(),
                                             [](double v) { return v != 0.0; }));
  report.ry_removed = total - report.coefficients_kept;
  return report;
}

/// Synthesizes the uniformly controlled rotation for a sparse coefficient
/// vector. Walks the full alternating RY/CNOT schedule, emits RY only for
/// nonzero angles, and merges the CNOT run between surviving rotations by
/// control parity: controls seen an even number of times vanish, odd-count
/// controls leave one CNOT, flushed in ascending qubit order.
inline std::vector<Gate> synth_compressed_ucry(const AngleVector& theta_hat,
                                               std::span<const unsigned> controls,
                                               unsigned target) {
  detail::require_walsh_fragment_args(theta_hat, controls);
  std::vector<Gate> gates;
  std::uint64_t pending = 0;  // parity bitmask indexed by control qubit
  const auto flush = [&] {
    while (pending != 0) {
      const unsigned q = static_cast<unsigned>(std::countr_zero(pending));
      gates.push_back(Gate::cnot(q, target));
      pending &= pending - 1;
    }
  };
  for (std::size_t l = 0; l < theta_hat.values.size(); ++l) {
    if (theta_hat.values[l] != 0.0) {
      flush();
      gates.push_back(Gate::ry(theta_hat.values[l], target));
    }
    if (const auto control = detail::ucry_control(controls, l)) {
      pending ^= std::uint64_t{1} << *control;
    }
  }
  flush();
  return gates;
}

}  // namespace quip
