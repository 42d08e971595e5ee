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
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <new>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "quip/walsh.hpp"

namespace quip {

struct BenchRow {
  unsigned exponent = 0;  // vector length 2^exponent
  std::string op;
  double median_ms = 0.0;
  bool skipped = false;
  std::string note;
};

namespace detail {

inline double median_of(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  if (samples.size() % 2 == 1) return samples[mid];
  return 0.5 * (samples[mid - 1] + samples[mid]);
}

template <typename Fn>
double time_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace detail

/// Times the in-place transforms on random vectors of length 2^n for each
/// n in [min_n, max_n]. Rounds are interleaved across sizes so a transient
/// system stall cannot poison a single size's whole sample; the per-size
/// buffers are therefore all held at once, and sizes that fail to allocate
/// are reported as skipped rows rather than aborting the sweep.
inline std::vector<BenchRow> run_transform_bench(unsigned min_n, unsigned max_n, unsigned reps,
                                                 std::uint64_t seed = 0x51D4B3C2A1ULL) {
  if (reps == 0) reps = 1;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, std::numbers::pi);

  struct Slot {
    unsigned n = 0;
    std::vector<double> data;
    std::vector<double> sfwht_ms;
    std::vector<double> gray_ms;
    bool skipped = false;
  };
  std::vector<Slot> slots;
  for (unsigned n = min_n; n <= max_n; ++n) {
    Slot slot;
    slot.n = n;
    try {
      slot.data.resize(std::size_t{1} << n);
      for (double& v : slot.data) v = dist(rng);
    } catch (const std::bad_alloc&) {
      slot.data.clear();
      slot.skipped = true;
    }
    slots.push_back(std::move(slot));
  }

  for (unsigned r = 0; r < reps + 1; ++r) {
    for (Slot& slot : slots) {
      if (slot.skipped) continue;
      const double sf = detail::time_ms([&] { sfwht(slot.data, Direction::forward); });
      const double gp = detail::time_ms([&] { gray_permute(slot.data, Direction::forward); });
      if (r == 0) continue;  // warmup round
      slot.sfwht_ms.push_back(sf);
      slot.gray_ms.push_back(gp);
    }
  }

  std::vector<BenchRow> rows;
  for (Slot& slot : slots) {
    if (slot.skipped) {
      rows.push_back({slot.n, "sfwht", 0.0, true, "allocation failed"});
      rows.push_back({slot.n, "gray_permute", 0.0, true, "allocation failed"});
      continue;
    }
    rows.push_back({slot.n, "sfwht", detail::median_of(std::move(slot.sfwht_ms)), false, ""});
    rows.push_back(
        {slot.n, "gray_permute", detail::median_of(std::move(slot.gray_ms)), false, ""});
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,op,median_ms\n";
  for (const BenchRow& row : rows) {
    if (row.skipped) {
      out += std::to_string(row.exponent) + "," + row.op + ",skipped: " + row.note + "\n";
      continue;
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", row.median_ms);
    out += std::to_string(row.exponent) + "," + row.op + "," + buffer + "\n";
  }
  return out;
}

}  // namespace quip
