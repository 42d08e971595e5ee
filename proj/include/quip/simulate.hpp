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
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "quip/circuit.hpp"
#include "quip/encoding.hpp"

namespace quip {

/// Dense complex amplitude vector. Index convention: qubit 0 is the most
/// significant bit, so a position/color state |k>|c> sits at k*2^l + c.
struct Statevector {
  std::vector<std::complex<double>> amplitudes;
  unsigned num_qubits = 0;
};

class qubit_limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct QualityMetrics {
  double max_amp_error = std::numeric_limits<double>::quiet_NaN();
  double fidelity = std::numeric_limits<double>::quiet_NaN();
  double psnr_db = std::numeric_limits<double>::quiet_NaN();
  double mse = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

constexpr unsigned kDefaultQubitLimit = 26;

inline std::size_t qubit_bit(unsigned num_qubits, unsigned qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

inline void check_qubit_budget(unsigned num_qubits, unsigned limit) {
  if (num_qubits > limit) {
    throw qubit_limit_error("circuit needs " + std::to_string(num_qubits) +
                            " qubits, limit is " + std::to_string(limit));
  }
}

inline void apply_real_single(std::vector<std::complex<double>>& amp, unsigned num_qubits,
                              unsigned qubit, double m00, double m01, double m10, double m11) {
  const std::size_t mask = qubit_bit(num_qubits, qubit);
  const std::size_t lo = mask - 1;
  const std::size_t hi = ~lo;
  const std::size_t half = amp.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t i0 = ((i & hi) << 1) | (i & lo);
    const std::size_t i1 = i0 | mask;
    const std::complex<double> a0 = amp[i0];
    const std::complex<double> a1 = amp[i1];
    amp[i0] = m00 * a0 + m01 * a1;
    amp[i1] = m10 * a0 + m11 * a1;
  }
}

inline void apply_cnot(std::vector<std::complex<double>>& amp, unsigned num_qubits,
                       unsigned control, unsigned target) {
  const std::size_t c = qubit_bit(num_qubits, control);
  const std::size_t t = qubit_bit(num_qubits, target);
  for (std::size_t i = 0; i < amp.size(); ++i) {
    if ((i & c) && !(i & t)) std::swap(amp[i], amp[i | t]);
  }
}

inline void apply_mcry(std::vector<std::complex<double>>& amp, unsigned num_qubits,
                       const Gate& gate) {
  std::size_t control_bits = 0;
  std::size_t positive_bits = 0;
  for (unsigned q = 0; q < num_qubits; ++q) {
    if (gate.control_mask & (std::uint64_t{1} << q)) {
      control_bits |= qubit_bit(num_qubits, q);
      if (gate.positive_mask & (std::uint64_t{1} << q)) {
        positive_bits |= qubit_bit(num_qubits, q);
      }
    }
  }
  const std::size_t t = qubit_bit(num_qubits, gate.target);
  const double c = std::cos(gate.angle / 2.0);
  const double s = std::sin(gate.angle / 2.0);
  for (std::size_t i = 0; i < amp.size(); ++i) {
    if ((i & t) || (i & control_bits) != positive_bits) continue;
    const std::complex<double> a0 = amp[i];
    const std::complex<double> a1 = amp[i | t];
    amp[i] = c * a0 - s * a1;
    amp[i | t] = s * a0 + c * a1;
  }
}

}  // namespace detail

/// Applies the circuit to |0...0> and returns the resulting state.
inline Statevector simulate(const Circuit& circuit,
                            unsigned qubit_limit = detail::kDefaultQubitLimit) {
  detail::check_qubit_budget(circuit.num_qubits, qubit_limit);
  Statevector state;
  state.num_qubits = circuit.num_qubits;
  state.amplitudes.assign(std::size_t{1} << circuit.num_qubits, 0.0);
  state.amplitudes[0] = 1.0;
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::h:
        detail::apply_real_single(state.amplitudes, state.num_qubits, g.target, inv_sqrt2,
                                  inv_sqrt2, inv_sqrt2, -inv_sqrt2);
        break;
      case GateKind::x:
        detail::apply_real_single(state.amplitudes, state.num_qubits, g.target, 0.0, 1.0, 1.0,
                                  0.0);
        break;
      case GateKind::ry: {
        const double c = std::cos(g.angle / 2.0);
        const double s = std::sin(g.angle / 2.0);
        detail::apply_real_single(state.amplitudes, state.num_qubits, g.target, c, -s, s, c);
        break;
      }
      case GateKind::cnot:
        detail::apply_cnot(state.amplitudes, state.num_qubits, g.control, g.target);
        break;
      case GateKind::mcry:
        detail::apply_mcry(state.amplitudes, state.num_qubits, g);
        break;
    }
  }
  return state;
}

namespace detail {

inline double frqi_color_angle(std::uint32_t value, std::uint32_t max_intensity) {
  return (std::numbers::pi / 2.0) * static_cast<double>(value) /
         static_cast<double>(max_intensity);
}

inline double ifrqi_color_angle(unsigned pair_bits) {
  constexpr double pi = std::numbers::pi;
  switch (pair_bits) {
    case 0b00: return 0.0;
    case 0b01: return pi / 5.0;
    case 0b10: return pi / 2.0 - pi / 5.0;
    default: return pi / 2.0;
  }
}

// Per-pixel color state as a list of independent qubit angles (product
// mappings) written into the 2^color_qubits block.
inline void fill_product_block(std::vector<std::complex<double>>& amp, std::size_t base,
                               const std::vector<double>& qubit_angles, double scale) {
  const unsigned q = static_cast<unsigned>(qubit_angles.size());
  const std::size_t dim = std::size_t{1} << q;
  for (std::size_t c = 0; c < dim; ++c) {
    double value = scale;
    for (unsigned i = 0; i < q; ++i) {
      const bool one = (c >> (q - 1 - i)) & 1u;
      value *= one ? std::sin(qubit_angles[i]) : std::cos(qubit_angles[i]);
    }
    amp[base + c] = value;
  }
}

}  // namespace detail

/// Builds the encoding's target state directly from its definition by tensor
/// arithmetic, never via gates, so it can cross-validate the synthesized
/// circuits.
inline Statevector oracle_state(const VectorizedImage& vi,
                                unsigned qubit_limit = detail::kDefaultQubitLimit) {
  const EncodingSpec& spec = vi.spec;
  detail::check_qubit_budget(spec.total_qubits(), qubit_limit);
  Statevector state;
  state.num_qubits = spec.total_qubits();
  state.amplitudes.assign(std::size_t{1} << state.num_qubits, 0.0);
  const std::size_t color_dim = std::size_t{1} << spec.color_qubits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(spec.padded_pixel_count));
  const std::uint32_t max_intensity = spec.max_intensity();

  for (std::size_t k = 0; k < spec.padded_pixel_count; ++k) {
    const std::size_t base = k * color_dim;
    switch (spec.mapping) {
      case Mapping::frqi: {
        const double theta = detail::frqi_color_angle(vi.channels[0][k], max_intensity);
        state.amplitudes[base] = scale * std::cos(theta);
        state.amplitudes[base + 1] = scale * std::sin(theta);
        break;
      }
      case Mapping::ifrqi: {
        const unsigned depth = 2 * spec.pair_count;
        std::vector<double> angles(spec.pair_count);
        for (unsigned i = 0; i < spec.pair_count; ++i) {
          const unsigned hi = (vi.channels[0][k] >> (depth - 1 - 2 * i)) & 1u;
          const unsigned lo = (vi.channels[0][k] >> (depth - 2 - 2 * i)) & 1u;
          angles[i] = detail::ifrqi_color_angle((hi << 1) | lo);
        }
        detail::fill_product_block(state.amplitudes, base, angles, scale);
        break;
      }
      case Mapping::neqr:
        state.amplitudes[base + vi.channels[0][k]] = scale;
        break;
      case Mapping::mcrqi: {
        std::vector<double> angles(3);
        for (unsigned c = 0; c < 3; ++c) {
          angles[c] = detail::frqi_color_angle(vi.channels[c][k], max_intensity);
        }
        detail::fill_product_block(state.amplitudes, base, angles, scale);
        break;
      }
      case Mapping::incqi: {
        std::size_t color_index = 0;
        for (unsigned c = 0; c < 4; ++c) {
          color_index = (color_index << spec.bit_depth) | vi.channels[c][k];
        }
        state.amplitudes[base + color_index] = scale;
        break;
      }
    }
  }
  return state;
}

/// Max elementwise amplitude difference and fidelity |<a|b>|^2.
inline QualityMetrics compare(const Statevector& a, const Statevector& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) {
    throw std::invalid_argument("statevector lengths differ");
  }
  QualityMetrics metrics;
  double max_err = 0.0;
  std::complex<double> overlap = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    max_err = std::max(max_err, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  metrics.max_amp_error = max_err;
  metrics.fidelity = std::norm(overlap);
  return metrics;
}

/// MSE / PSNR between two same-shape integer images, computed over all
/// channels. Exact reconstruction reports infinite PSNR.
inline QualityMetrics image_quality(const ImageBuffer& reference, const ImageBuffer& actual) {
  if (reference.samples.size() != actual.samples.size()) {
    throw std::invalid_argument("image sizes differ");
  }
  QualityMetrics metrics;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < reference.samples.size(); ++i) {
    const double d = static_cast<double>(reference.samples[i]) -
                     static_cast<double>(actual.samples[i]);
    sum_sq += d * d;
  }
  metrics.mse = sum_sq / static_cast<double>(reference.samples.size());
  const double peak = static_cast<double>(reference.max_intensity());
  metrics.psnr_db = metrics.mse == 0.0 ? std::numeric_limits<double>::infinity()
                                       : 10.0 * std::log10(peak * peak / metrics.mse);
  return metrics;
}

namespace detail {

// Marginal probabilities of one color qubit within a pixel block; used for
// the product-state mappings where each color qubit decodes independently.
inline std::pair<double, double> color_qubit_marginals(const Statevector& state,
                                                       std::size_t base, unsigned color_qubits,
                                                       unsigned qubit_in_block) {
  const std::size_t dim = std::size_t{1} << color_qubits;
  double p0 = 0.0;
  double p1 = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    const double mass = std::norm(state.amplitudes[base + c]);
    if ((c >> (color_qubits - 1 - qubit_in_block)) & 1u) {
      p1 += mass;
    } else {
      p0 += mass;
    }
  }
  return {p0, p1};
}

inline unsigned classify_ifrqi_angle(double angle) {
  constexpr double pi = std::numbers::pi;
  constexpr double levels[4] = {0.0, pi / 5.0, pi / 2.0 - pi / 5.0, pi / 2.0};
  unsigned best = 0;
  double best_dist = std::abs(angle - levels[0]);
  for (unsigned i = 1; i < 4; ++i) {
    const double dist = std::abs(angle - levels[i]);
    if (dist < best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  return best;
}

inline std::size_t unique_basis_index(const Statevector& state, std::size_t base,
                                      std::size_t color_dim, const char* mapping_name) {
  constexpr double kBasisTolerance = 1e-8;
  std::size_t found = color_dim;
  for (std::size_t c = 0; c < color_dim; ++c) {
    if (std::abs(state.amplitudes[base + c]) > kBasisTolerance) {
      if (found != color_dim) {
        throw std::domain_error(std::string("not a valid ") + mapping_name +
                                " state: multiple color basis states at one position");
      }
      found = c;
    }
  }
  if (found == color_dim) {
    throw std::domain_error(std::string("not a valid ") + mapping_name +
                            " state: no color basis state at a position");
  }
  return found;
}

}  // namespace detail

struct Reconstruction {
  ImageBuffer image;
  QualityMetrics metrics;  // psnr/mse filled when a reference image is given
};

/// Reads the image back out of a statevector. FRQI and MCRQI decode each
/// color qubit from its cos/sin pair, IFRQI classifies each pair qubit to
/// the nearest of its four levels, NEQR and INCQI read the unique color
/// basis state. Padding positions are dropped per the encoding spec.
inline Reconstruction reconstruct(const EncodingSpec& spec, const Statevector& state,
                                  const ImageBuffer* reference = nullptr) {
  if (state.amplitudes.size() != (std::size_t{1} << spec.total_qubits())) {
    throw std::invalid_argument("statevector length does not match the encoding spec");
  }
  ImageBuffer img;
  img.width = spec.width;
  img.height = spec.height;
  img.channels = spec.channels;
  img.bit_depth = spec.bit_depth;
  img.samples.assign(spec.original_pixel_count * spec.channels, 0);

  const std::size_t color_dim = std::size_t{1} << spec.color_qubits;
  const std::uint32_t max_intensity = spec.max_intensity();

  for (std::size_t k = 0; k < spec.original_pixel_count; ++k) {
    const std::size_t base = k * color_dim;
    switch (spec.mapping) {
      case Mapping::frqi: {
        const double alpha = state.amplitudes[base].real();
        const double beta = state.amplitudes[base + 1].real();
        img.samples[k] = decode_frqi(alpha, beta, max_intensity).value_or(0);
        break;
      }
      case Mapping::mcrqi: {
        for (unsigned c = 0; c < 3; ++c) {
          const auto [p0, p1] =
              detail::color_qubit_marginals(state, base, spec.color_qubits, c);
          img.samples[3 * k + c] =
              decode_frqi(std::sqrt(p0), std::sqrt(p1), max_intensity).value_or(0);
        }
        break;
      }
      case Mapping::ifrqi: {
        std::uint32_t value = 0;
        for (unsigned i = 0; i < spec.pair_count; ++i) {
          const auto [p0, p1] =
              detail::color_qubit_marginals(state, base, spec.color_qubits, i);
          const double angle = std::atan2(std::sqrt(p1), std::sqrt(p0));
          value = (value << 2) | detail::classify_ifrqi_angle(angle);
        }
        img.samples[k] = value;
        break;
      }
      case Mapping::neqr: {
        img.samples[k] = static_cast<std::uint32_t>(
            detail::unique_basis_index(state, base, color_dim, "neqr"));
        break;
      }
      case Mapping::incqi: {
        const std::size_t c = detail::unique_basis_index(state, base, color_dim, "incqi");
        const std::uint32_t field_mask = (1u << spec.bit_depth) - 1u;
        for (unsigned ch = 0; ch < 4; ++ch) {
          const unsigned shift = spec.bit_depth * (3 - ch);
          img.samples[4 * k + ch] = (static_cast<std::uint32_t>(c) >> shift) & field_mask;
        }
        break;
      }
    }
  }

  Reconstruction result{std::move(img), {}};
  if (reference != nullptr) {
    result.metrics = image_quality(*reference, result.image);
  }
  return result;
}

}  // namespace quip
