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
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "quip/image.hpp"

namespace quip {

enum class Mapping { frqi, ifrqi, neqr, mcrqi, incqi };

inline std::string_view to_string(Mapping m) {
  switch (m) {
    case Mapping::frqi: return "frqi";
    case Mapping::ifrqi: return "ifrqi";
    case Mapping::neqr: return "neqr";
    case Mapping::mcrqi: return "mcrqi";
    case Mapping::incqi: return "incqi";
  }
  return "?";
}

inline std::optional<Mapping> mapping_from_string(std::string_view name) {
  if (name == "frqi") return Mapping::frqi;
  if (name == "ifrqi") return Mapping::ifrqi;
  if (name == "neqr") return Mapping::neqr;
  if (name == "mcrqi") return Mapping::mcrqi;
  if (name == "incqi") return Mapping::incqi;
  return std::nullopt;
}

enum class AngleDomain { pixel, walsh };

/// Length-2^n vector of rotation angles. Values always hold the circuit
/// rotation angle (twice the color angle); the tag tracks whether the vector
/// is in pixel order or has been taken through the Walsh/Gray solve.
struct AngleVector {
  std::vector<double> values;
  AngleDomain domain = AngleDomain::pixel;
  unsigned index_qubits = 0;  // values.size() == 2^index_qubits
};

/// Which mapping a circuit encodes plus the geometry needed to invert it.
struct EncodingSpec {
  Mapping mapping = Mapping::frqi;
  unsigned position_qubits = 0;  // n
  unsigned color_qubits = 1;
  std::size_t original_pixel_count = 0;
  std::size_t padded_pixel_count = 0;  // 2^position_qubits
  unsigned bit_depth = 8;              // bits per channel
  unsigned pair_count = 0;             // IFRQI only
  double compression_percent = 0.0;
  std::size_t width = 0;
  std::size_t height = 0;
  unsigned channels = 1;

  unsigned total_qubits() const { return position_qubits + color_qubits; }
  std::uint32_t max_intensity() const { return (1u << bit_depth) - 1u; }
};

/// Per-channel pixel arrays, flattened row-major and zero-padded to 2^n.
struct VectorizedImage {
  std::vector<std::vector<std::uint32_t>> channels;
  EncodingSpec spec;
};

inline unsigned position_qubits_for(std::size_t pixel_count) {
  unsigned n = 0;
  while ((std::size_t{1} << n) < pixel_count) ++n;
  return n;
}

inline unsigned color_qubits_for(Mapping mapping, unsigned bit_depth) {
  switch (mapping) {
    case Mapping::frqi: return 1;
    case Mapping::ifrqi: return bit_depth / 2;
    case Mapping::neqr: return bit_depth;
    case Mapping::mcrqi: return 3;
    case Mapping::incqi: return 4 * bit_depth;
  }
  return 0;
}

inline unsigned channels_for(Mapping mapping) {
  switch (mapping) {
    case Mapping::frqi:
    case Mapping::ifrqi:
    case Mapping::neqr: return 1;
    case Mapping::mcrqi: return 3;
    case Mapping::incqi: return 4;
  }
  return 0;
}

/// Flattens each channel with k = row*width + col, zero-pads to the next
/// power of two, and fills in the encoding geometry for `mapping`.
inline VectorizedImage vectorize(const ImageBuffer& img, Mapping mapping) {
  if (img.pixel_count() == 0) throw std::invalid_argument("empty image");
  if (img.samples.size() != img.pixel_count() * img.channels) {
    throw std::invalid_argument("sample count does not match image dimensions");
  }
  if (img.channels != channels_for(mapping)) {
    throw std::domain_error(std::string(to_string(mapping)) + " mapping expects " +
                            std::to_string(channels_for(mapping)) + " channel(s), image has " +
                            std::to_string(img.channels));
  }
  if (mapping == Mapping::ifrqi && img.bit_depth % 2 != 0) {
    throw std::domain_error("ifrqi mapping requires an even bit depth");
  }

  VectorizedImage out;
  EncodingSpec& spec = out.spec;
  spec.mapping = mapping;
  spec.position_qubits = position_qubits_for(img.pixel_count());
  spec.color_qubits = color_qubits_for(mapping, img.bit_depth);
  spec.original_pixel_count = img.pixel_count();
  spec.padded_pixel_count = std::size_t{1} << spec.position_qubits;
  spec.bit_depth = img.bit_depth;
  spec.pair_count = mapping == Mapping::ifrqi ? img.bit_depth / 2 : 0;
  spec.width = img.width;
  spec.height = img.height;
  spec.channels = img.channels;

  out.channels.resize(img.channels);
  for (unsigned c = 0; c < img.channels; ++c) {
    auto& channel = out.channels[c];
    channel.resize(spec.padded_pixel_count, 0);
    for (std::size_t k = 0; k < img.pixel_count(); ++k) {
      channel[k] = img.samples[k * img.channels + c];
    }
  }
  return out;
}

/// FRQI angle map: stored value is the circuit angle pi * g / K, i.e. twice
/// the color angle of the cos/sin encoding.
inline AngleVector frqi_angles(std::span<const std::uint32_t> channel, std::uint32_t max_intensity) {
  if (max_intensity == 0) throw std::invalid_argument("max intensity must be positive");
  if (!std::has_single_bit(channel.size())) {
    throw std::invalid_argument("channel length must be a power of two");
  }
  AngleVector out;
  out.index_qubits = static_cast<unsigned>(std::countr_zero(channel.size()));
  out.values.reserve(channel.size());
  for (const std::uint32_t g : channel) {
    if (g > max_intensity) throw std::domain_error("pixel value exceeds max intensity");
    out.values.push_back(std::numbers::pi * static_cast<double>(g) /
                         static_cast<double>(max_intensity));
  }
  return out;
}

namespace detail {

// The four IFRQI circuit angles (twice the color angles), indexed by the
// two-bit pattern with the first bit of the pair most significant.
inline double ifrqi_stored_angle(unsigned pair_bits) {
  constexpr double pi = std::numbers::pi;
  switch (pair_bits) {
    case 0b00: return 0.0;
    case 0b01: return 2.0 * (pi / 5.0);
    case 0b10: return 2.0 * (pi / 2.0 - pi / 5.0);
    default: return pi;
  }
}

}  // namespace detail

/// IFRQI angle map for bit depth 2p: plane i collapses bit pair
/// (b^{2i}, b^{2i+1}) of each pixel, with b^0 the most significant bit.
inline std::vector<AngleVector> ifrqi_angles(std::span<const std::uint32_t> channel,
                                             unsigned pair_count) {
  if (pair_count == 0) throw std::invalid_argument("pair count must be positive");
  if (!std::has_single_bit(channel.size())) {
    throw std::invalid_argument("channel length must be a power of two");
  }
  const unsigned depth = 2 * pair_count;
  const unsigned n = static_cast<unsigned>(std::countr_zero(channel.size()));
  std::vector<AngleVector> planes(pair_count);
  for (auto& p : planes) {
    p.index_qubits = n;
    p.values.resize(channel.size());
  }
  for (std::size_t k = 0; k < channel.size(); ++k) {
    const std::uint32_t g = channel[k];
    if (g >= (1u << depth)) throw std::domain_error("pixel value exceeds bit depth");
    for (unsigned i = 0; i < pair_count; ++i) {
      const unsigned hi = (g >> (depth - 1 - 2 * i)) & 1u;
      const unsigned lo = (g >> (depth - 2 - 2 * i)) & 1u;
      planes[i].values[k] = detail::ifrqi_stored_angle((hi << 1) | lo);
    }
  }
  return planes;
}

/// NEQR angle map: plane i holds 0 or pi according to bit b^i of each pixel,
/// with b^0 the most significant bit.
inline std::vector<AngleVector> neqr_angles(std::span<const std::uint32_t> channel,
                                            unsigned bit_depth) {
  if (bit_depth == 0) throw std::invalid_argument("bit depth must be positive");
  if (!std::has_single_bit(channel.size())) {
    throw std::invalid_argument("channel length must be a power of two");
  }
  const unsigned n = static_cast<unsigned>(std::countr_zero(channel.size()));
  std::vector<AngleVector> planes(bit_depth);
  for (auto& p : planes) {
    p.index_qubits = n;
    p.values.resize(channel.size());
  }
  for (std::size_t k = 0; k < channel.size(); ++k) {
    const std::uint32_t g = channel[k];
    if (g >= (1u << bit_depth)) throw std::domain_error("pixel value exceeds bit depth");
    for (unsigned i = 0; i < bit_depth; ++i) {
      planes[i].values[k] = ((g >> (bit_depth - 1 - i)) & 1u) ? std::numbers::pi : 0.0;
    }
  }
  return planes;
}

/// Inverts the FRQI cos/sin pair back to a grayscale value. Returns nullopt
/// when both amplitudes are below 1e-14 (an unmeasured pixel).
inline std::optional<std::uint32_t> decode_frqi(double alpha, double beta,
                                                std::uint32_t max_intensity) {
  if (std::abs(alpha) < 1e-14 && std::abs(beta) < 1e-14) return std::nullopt;
  const double angle = std::atan2(beta, alpha);
  const long g = std::lround(static_cast<double>(max_intensity) * angle /
                             (std::numbers::pi / 2.0));
  return static_cast<std::uint32_t>(
      std::clamp(g, 0L, static_cast<long>(max_intensity)));
}

/// Builds the per-plane pixel-domain angle vectors for a vectorized image,
/// ordered by the color qubit each plane targets.
inline std::vector<AngleVector> encoding_planes(const VectorizedImage& vi) {
  const EncodingSpec& spec = vi.spec;
  std::vector<AngleVector> planes;
  switch (spec.mapping) {
    case Mapping::frqi:
      planes.push_back(frqi_angles(vi.channels[0], spec.max_intensity()));
      break;
    case Mapping::ifrqi:
      planes = ifrqi_angles(vi.channels[0], spec.pair_count);
      break;
    case Mapping::neqr:
      planes = neqr_angles(vi.channels[0], spec.bit_depth);
      break;
    case Mapping::mcrqi:
      for (unsigned c = 0; c < 3; ++c) {
        planes.push_back(frqi_angles(vi.channels[c], spec.max_intensity()));
      }
      break;
    case Mapping::incqi:
      for (unsigned c = 0; c < 4; ++c) {
        auto channel_planes = neqr_angles(vi.channels[c], spec.bit_depth);
        for (auto& p : channel_planes) planes.push_back(std::move(p));
      }
      break;
  }
  return planes;
}

}  // namespace quip
