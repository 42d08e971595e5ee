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

#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "quip/pipeline.hpp"
#include "quip/simulate.hpp"
#include "testutil.hpp"

using quip::Circuit;
using quip::Gate;
using quip::Mapping;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;

double state_norm(const quip::Statevector& s) {
  double total = 0.0;
  for (const auto& a : s.amplitudes) total += std::norm(a);
  return std::sqrt(total);
}
}  // namespace

TEST_CASE("empty circuit leaves the all-zero state") {
  const auto state = quip::simulate(Circuit{3, {}, {}});
  CHECK(state.amplitudes[0] == std::complex<double>{1.0, 0.0});
  for (std::size_t i = 1; i < 8; ++i) CHECK(std::abs(state.amplitudes[i]) == 0.0);
}

TEST_CASE("hadamards spread over the position register only") {
  Circuit c{3, {}, {}};
  c.gates.push_back(Gate::h(0));
  c.gates.push_back(Gate::h(1));
  const auto state = quip::simulate(c);
  for (const std::size_t i : {0u, 2u, 4u, 6u}) {
    CHECK(state.amplitudes[i].real() == Approx(0.5).margin(1e-15));
  }
  for (const std::size_t i : {1u, 3u, 5u, 7u}) {
    CHECK(std::abs(state.amplitudes[i]) == 0.0);
  }
}

TEST_CASE("x flips the most significant qubit") {
  Circuit c{2, {}, {}};
  c.gates.push_back(Gate::x(0));
  const auto state = quip::simulate(c);
  CHECK(state.amplitudes[2].real() == 1.0);
}

TEST_CASE("cnot flips the target only when the control is set") {
  Circuit c{2, {}, {}};
  c.gates.push_back(Gate::x(0));
  c.gates.push_back(Gate::cnot(0, 1));
  CHECK(quip::simulate(c).amplitudes[3].real() == 1.0);

  Circuit idle{2, {}, {}};
  idle.gates.push_back(Gate::cnot(0, 1));
  CHECK(quip::simulate(idle).amplitudes[0].real() == 1.0);
}

TEST_CASE("mcry honors negative controls") {
  // q0 negative, q1 positive, target q2
  Circuit c{3, {}, {}};
  c.gates.push_back(Gate::x(1));
  c.gates.push_back(Gate::mcry(0b011, 0b010, pi, 2));
  const auto state = quip::simulate(c);
  CHECK(state.amplitudes[0b011].real() == Approx(1.0).margin(1e-15));

  Circuit blocked{3, {}, {}};
  blocked.gates.push_back(Gate::x(0));
  blocked.gates.push_back(Gate::x(1));
  blocked.gates.push_back(Gate::mcry(0b011, 0b010, pi, 2));
  CHECK(quip::simulate(blocked).amplitudes[0b110].real() == Approx(1.0).margin(1e-15));
}

TEST_CASE("frqi circuit of a 2x2 image interleaves cosines and sines") {
  const auto img = quiptest::random_image(2, 2, 1, 8, 41);
  const auto vi = quip::vectorize(img, Mapping::frqi);
  const auto angles = quip::frqi_angles(vi.channels[0], 255);
  const auto state = quip::simulate(quip::frqi_circuit(angles, vi.spec));
  for (std::size_t k = 0; k < 4; ++k) {
    const double theta = angles.values[k] / 2;
    CHECK(state.amplitudes[2 * k].real() == Approx(0.5 * std::cos(theta)).margin(1e-12));
    CHECK(state.amplitudes[2 * k + 1].real() == Approx(0.5 * std::sin(theta)).margin(1e-12));
  }
}

TEST_CASE("gate application preserves the norm") {
  const auto img = quiptest::random_image(8, 4, 1, 8, 42);
  const auto enc = quip::encode_image(img, Mapping::frqi, 45.0);
  CHECK(state_norm(quip::simulate(enc.circuit)) == Approx(1.0).margin(1e-12));
}

TEST_CASE("frqi amplitudes stay real and non-negative") {
  const auto img = quiptest::random_image(8, 8, 1, 8, 43);
  const auto enc = quip::encode_image(img, Mapping::frqi, 0.0);
  const auto state = quip::simulate(enc.circuit);
  for (const auto& amp : state.amplitudes) {
    CHECK(std::abs(amp.imag()) < 1e-12);
    CHECK(amp.real() > -1e-12);
  }
}

TEST_CASE("qubit budget is enforced") {
  CHECK_THROWS_AS(quip::simulate(Circuit{27, {}, {}}), quip::qubit_limit_error);
  CHECK_THROWS_AS(quip::simulate(Circuit{5, {}, {}}, 4), quip::qubit_limit_error);
}

TEST_CASE("oracle state for one black pixel padded to two") {
  // hand-built two-pixel layout with g = (1, 0): position 1 is the padding
  quip::VectorizedImage vi;
  vi.spec.mapping = Mapping::frqi;
  vi.spec.position_qubits = 1;
  vi.spec.color_qubits = 1;
  vi.spec.bit_depth = 1;
  vi.spec.original_pixel_count = 1;
  vi.spec.padded_pixel_count = 2;
  vi.spec.width = vi.spec.height = 1;
  vi.channels = {{1, 0}};
  const auto state = quip::oracle_state(vi);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(state.amplitudes[0]) == Approx(0.0).margin(1e-15));
  CHECK(state.amplitudes[1].real() == Approx(s).margin(1e-15));
  CHECK(state.amplitudes[2].real() == Approx(s).margin(1e-15));
  CHECK(std::abs(state.amplitudes[3]) == Approx(0.0).margin(1e-15));
}

TEST_CASE("oracle state places neqr color values as basis states") {
  quip::ImageBuffer img{2, 1, 1, 2, {2, 1}};
  const auto vi = quip::vectorize(img, Mapping::neqr);
  const auto state = quip::oracle_state(vi);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(state.amplitudes[0b010].real() == Approx(s));  // k=0, c=10b
  CHECK(state.amplitudes[0b101].real() == Approx(s));  // k=1, c=01b
  std::size_t nonzero = 0;
  for (const auto& a : state.amplitudes) {
    if (std::abs(a) > 1e-12) ++nonzero;
  }
  CHECK(nonzero == 2);
}

TEST_CASE("oracle state for an extremal mcrqi pixel") {
  quip::ImageBuffer img{1, 1, 3, 8, {255, 0, 0}};
  const auto vi = quip::vectorize(img, Mapping::mcrqi);
  const auto state = quip::oracle_state(vi);
  CHECK(state.amplitudes[0b100].real() == Approx(1.0).margin(1e-15));
}

TEST_CASE("neqr states have N nonzero amplitudes of magnitude 1/sqrt(N)") {
  const auto img = quiptest::random_image(4, 4, 1, 4, 44);
  const auto enc = quip::encode_image(img, Mapping::neqr, 0.0);
  const auto state = quip::simulate(enc.circuit);
  std::size_t nonzero = 0;
  for (const auto& a : state.amplitudes) {
    if (std::abs(a) > 1e-8) {
      CHECK(std::abs(a) == Approx(0.25).margin(1e-10));
      ++nonzero;
    }
  }
  CHECK(nonzero == 16);
}

TEST_CASE("simulated circuits match the analytic state for every mapping") {
  struct Case {
    Mapping mapping;
    std::size_t w, h;
    unsigned channels, depth;
  };
  const Case cases[] = {
      {Mapping::frqi, 8, 8, 1, 8},  {Mapping::ifrqi, 8, 4, 1, 4},
      {Mapping::neqr, 8, 4, 1, 4},  {Mapping::mcrqi, 8, 4, 3, 8},
      {Mapping::incqi, 4, 2, 4, 2},
  };
  for (const auto& c : cases) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto img = quiptest::random_image(c.w, c.h, c.channels, c.depth, 800 + seed);
      const auto enc = quip::encode_image(img, c.mapping, 0.0);
      const auto simulated = quip::simulate(enc.circuit);
      const auto analytic = quip::oracle_state(enc.vectorized);
      const auto metrics = quip::compare(simulated, analytic);
      INFO("mapping " << quip::to_string(c.mapping) << " seed " << seed);
      CHECK(metrics.max_amp_error < 1e-10);
    }
  }
}

TEST_CASE("reconstruct inverts the oracle state for every mapping") {
  struct Case {
    Mapping mapping;
    std::size_t w, h;
    unsigned channels, depth;
  };
  const Case cases[] = {
      {Mapping::frqi, 8, 8, 1, 8},  {Mapping::ifrqi, 8, 8, 1, 4},
      {Mapping::neqr, 8, 8, 1, 4},  {Mapping::mcrqi, 8, 8, 3, 8},
      {Mapping::incqi, 4, 4, 4, 2},
  };
  for (const auto& c : cases) {
    const auto img = quiptest::random_image(c.w, c.h, c.channels, c.depth, 900);
    const auto vi = quip::vectorize(img, c.mapping);
    const auto recon = quip::reconstruct(vi.spec, quip::oracle_state(vi), &img);
    INFO("mapping " << quip::to_string(c.mapping));
    CHECK(recon.image.samples == img.samples);
    CHECK(recon.metrics.psnr_db == std::numeric_limits<double>::infinity());
    CHECK(recon.metrics.mse == 0.0);
  }
}

TEST_CASE("padding positions are dropped on reconstruction") {
  const auto img = quiptest::random_image(5, 3, 1, 8, 45);  // pads 15 -> 16
  const auto vi = quip::vectorize(img, Mapping::frqi);
  const auto recon = quip::reconstruct(vi.spec, quip::oracle_state(vi));
  CHECK(recon.image.samples.size() == 15);
  CHECK(recon.image.samples == img.samples);
}

TEST_CASE("full pipeline reconstruction is exact for 8-bit images") {
  const auto img = quiptest::random_image(16, 16, 1, 8, 46);
  const auto result = quip::roundtrip_image(img, Mapping::frqi, 0.0);
  CHECK(result.reconstructed.samples == img.samples);
  CHECK(result.quality.psnr_db == std::numeric_limits<double>::infinity());
  CHECK(result.quality.fidelity == Approx(1.0).margin(1e-12));
}

TEST_CASE("invalid basis-state patterns are reported") {
  quip::ImageBuffer img{2, 1, 1, 2, {2, 1}};
  const auto vi = quip::vectorize(img, Mapping::neqr);
  auto state = quip::oracle_state(vi);
  state.amplitudes[0] = 0.5;  // second basis state at position 0
  try {
    quip::reconstruct(vi.spec, state);
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("not a valid neqr state") != std::string::npos);
  }
}

TEST_CASE("compare reports fidelity and amplitude error") {
  Circuit a{2, {}, {}};
  const auto sa = quip::simulate(a);
  CHECK(quip::compare(sa, sa).fidelity == Approx(1.0));
  CHECK(quip::compare(sa, sa).max_amp_error == 0.0);

  Circuit b{2, {}, {}};
  b.gates.push_back(Gate::x(0));
  const auto sb = quip::simulate(b);
  CHECK(quip::compare(sa, sb).fidelity == Approx(0.0).margin(1e-15));

  Circuit c{3, {}, {}};
  CHECK_THROWS_AS(quip::compare(sa, quip::simulate(c)), std::invalid_argument);
}
