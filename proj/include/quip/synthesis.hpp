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

#include <bit>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "quip/circuit.hpp"
#include "quip/walsh.hpp"

namespace quip {

namespace detail {

inline void require_walsh_fragment_args(const AngleVector& theta_hat,
                                        std::span<const unsigned> controls) {
  if (theta_hat.domain != AngleDomain::walsh) {
    throw std::invalid_argument("uniformly controlled ry expects walsh-domain angles");
  }
  if (theta_hat.values.size() != (std::size_t{1} << controls.size())) {
    throw std::invalid_argument("angle count must be 2^(number of controls)");
  }
}

// Control qubit of the l-th CNOT in the uniformly controlled schedule: the
// bit where the l-th and (l+1)-st Gray codes differ, with controls[0] the
// most significant position bit. Returns nullopt for the degenerate
// zero-control schedule (single rotation, no CNOT).
inline std::optional<unsigned> ucry_control(std::span<const unsigned> controls, std::size_t l) {
  const std::size_t count = std::size_t{1} << controls.size();
  const std::uint64_t delta = gray_code(l) ^ gray_code((l + 1) & (count - 1));
  if (delta == 0) return std::nullopt;
  const unsigned bit = static_cast<unsigned>(std::countr_zero(delta));
  return controls[controls.size() - 1 - bit];
}

}  // namespace detail

/// Uniformly controlled RY over 2^n walsh-domain angles: alternating
/// RY/CNOT pairs, 2^n of each. The final CNOT wraps the Gray cycle and is
/// always controlled by the most significant position bit.
inline std::vector<Gate> ucry(const AngleVector& theta_hat, std::span<const unsigned> controls,
                              unsigned target) {
  detail::require_walsh_fragment_args(theta_hat, controls);
  std::vector<Gate> gates;
  gates.reserve(2 * theta_hat.values.size());
  for (std::size_t l = 0; l < theta_hat.values.size(); ++l) {
    gates.push_back(Gate::ry(theta_hat.values[l], target));
    if (const auto control = detail::ucry_control(controls, l)) {
      gates.push_back(Gate::cnot(*control, target));
    }
  }
  return gates;
}

/// H on every position qubit followed by one uniformly controlled rotation
/// per plane; plane p targets color qubit n + p. Planes arrive in pixel
/// domain and are solved here. Uncompressed by construction: every plane
/// contributes exactly 2^n RY and 2^n CNOT gates.
inline Circuit mapping_circuit(const EncodingSpec& spec, std::vector<AngleVector> planes) {
  if (planes.size() != spec.color_qubits) {
    throw std::invalid_argument("plane count must match the color qubit count");
  }
  Circuit circuit{spec.total_qubits(), {}, spec};
  for (unsigned q = 0; q < spec.position_qubits; ++q) circuit.gates.push_back(Gate::h(q));
  std::vector<unsigned> controls(spec.position_qubits);
  std::iota(controls.begin(), controls.end(), 0u);
  for (unsigned p = 0; p < planes.size(); ++p) {
    AngleVector& plane = planes[p];
    if (plane.values.size() != spec.padded_pixel_count) {
      throw std::invalid_argument("plane length must match the padded pixel count");
    }
    if (plane.domain == AngleDomain::pixel) solve_angles(plane);
    auto fragment = ucry(plane, controls, spec.position_qubits + p);
    circuit.gates.insert(circuit.gates.end(), fragment.begin(), fragment.end());
  }
  return circuit;
}

/// FRQI state-preparation circuit on n+1 qubits.
inline Circuit frqi_circuit(AngleVector pixel_angles, const EncodingSpec& spec) {
  if (spec.mapping != Mapping::frqi || spec.color_qubits != 1) {
    throw std::invalid_argument("frqi_circuit expects an frqi encoding spec");
  }
  std::vector<AngleVector> planes;
  planes.push_back(std::move(pixel_angles));
  return mapping_circuit(spec, std::move(planes));
}

/// Pixel-by-pixel FRQI baseline: one multi-controlled RY per pixel, with the
/// control polarities spelling out the pixel index. Semantic oracle only;
/// the gates are simulated directly and never decomposed, so the size cap
/// keeps it at test scale.
inline Circuit mcry_baseline_circuit(const AngleVector& pixel_angles, const EncodingSpec& spec) {
  if (pixel_angles.domain != AngleDomain::pixel) {
    throw std::invalid_argument("baseline expects pixel-domain angles");
  }
  if (spec.padded_pixel_count > (std::size_t{1} << 12)) {
    throw std::domain_error("baseline circuit limited to 4096 pixels");
  }
  if (pixel_angles.values.size() != spec.padded_pixel_count) {
    throw std::invalid_argument("angle count must match the padded pixel count");
  }
  const unsigned n = spec.position_qubits;
  Circuit circuit{n + 1, {}, spec};
  for (unsigned q = 0; q < n; ++q) circuit.gates.push_back(Gate::h(q));
  std::uint64_t control_mask = 0;
  for (unsigned q = 0; q < n; ++q) control_mask |= std::uint64_t{1} << q;
  for (std::size_t k = 0; k < spec.padded_pixel_count; ++k) {
    std::uint64_t positive = 0;
    for (unsigned q = 0; q < n; ++q) {
      if ((k >> (n - 1 - q)) & 1u) positive |= std::uint64_t{1} << q;
    }
    circuit.gates.push_back(Gate::mcry(control_mask, positive, pixel_angles.values[k], n));
  }
  return circuit;
}

}  // namespace quip
