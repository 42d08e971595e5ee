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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "quip/encoding.hpp"

namespace quip {

enum class Direction { forward, inverse };

/// Reflected Gray code of k.
constexpr std::uint64_t gray_code(std::uint64_t k) { return k ^ (k >> 1); }

/// Inverse of gray_code (prefix-XOR fold).
constexpr std::uint64_t gray_decode(std::uint64_t g) {
  g ^= g >> 1;
  g ^= g >> 2;
  g ^= g >> 4;
  g ^= g >> 8;
  g ^= g >> 16;
  g ^= g >> 32;
  return g;
}

namespace detail {

inline void require_power_of_two(std::size_t size) {
  if (!std::has_single_bit(size)) {
    throw std::invalid_argument("length must be a power of two");
  }
}

}  // namespace detail

/// In-place Gray permutation. Forward realizes w = P_G v (the element at
/// index k moves to index gray_code(k)); inverse realizes w = P_G^{-1} v.
/// Cycle-leader walk with an N-bit visited bitmap; no full scratch copy.
inline void gray_permute(std::span<double> v, Direction direction) {
  detail::require_power_of_two(v.size());
  const std::size_t size = v.size();
  std::vector<std::uint64_t> visited((size + 63) / 64, 0);
  const auto seen = [&](std::size_t i) { return (visited[i >> 6] >> (i & 63)) & 1u; };
  const auto mark = [&](std::size_t i) { visited[i >> 6] |= std::uint64_t{1} << (i & 63); };
  // Both directions are gathers w[i] = v[f(i)]:
  //   forward: w[gray(k)] = v[k]  <=>  w[i] = v[gray_decode(i)]
  //   inverse: w[k] = v[gray(k)]
  const auto source = [&](std::size_t i) {
    return direction == Direction::forward ? static_cast<std::size_t>(gray_decode(i))
                                           : static_cast<std::size_t>(gray_code(i));
  };
  for (std::size_t start = 0; start < size; ++start) {
    if (seen(start)) continue;
    mark(start);
    const double carry = v[start];
    std::size_t i = start;
    for (std::size_t j = source(i); j != start; i = j, j = source(i)) {
      v[i] = v[j];
      mark(j);
    }
    v[i] = carry;
  }
}

/// In-place scaled fast Walsh-Hadamard transform. Forward computes
/// (1/2^n) H^{(x)n} v with the 1/2 folded into every butterfly stage so
/// intermediates stay bounded by max|v|; inverse computes the unscaled
/// H^{(x)n} v. The two directions are exact mutual inverses.
inline void sfwht(std::span<double> v, Direction direction) {
  detail::require_power_of_two(v.size());
  const bool scaled = direction == Direction::forward;
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t block = 0; block < v.size(); block += 2 * h) {
      for (std::size_t j = block; j < block + h; ++j) {
        const double x = v[j];
        const double y = v[j + h];
        if (scaled) {
          v[j] = 0.5 * (x + y);
          v[j + h] = 0.5 * (x - y);
        } else {
          v[j] = x + y;
          v[j + h] = x - y;
        }
      }
    }
  }
}

/// Solves (H^{(x)n} P_G) theta_hat = theta for the circuit angles:
/// scaled transform followed by the inverse Gray permutation, in place.
inline void solve_angles(AngleVector& angles) {
  if (angles.domain != AngleDomain::pixel) {
    throw std::invalid_argument("solve_angles expects a pixel-domain vector");
  }
  sfwht(angles.values, Direction::forward);
  gray_permute(angles.values, Direction::inverse);
  angles.domain = AngleDomain::walsh;
}

/// Applies H^{(x)n} P_G to recover pixel-domain angles from circuit angles;
/// the exact inverse of solve_angles.
inline void apply_angles(AngleVector& angles) {
  if (angles.domain != AngleDomain::walsh) {
    throw std::invalid_argument("apply_angles expects a walsh-domain vector");
  }
  gray_permute(angles.values, Direction::forward);
  sfwht(angles.values, Direction::inverse);
  angles.domain = AngleDomain::pixel;
}

}  // namespace quip
