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

#include <numeric>
#include <vector>

#include "quip/compress.hpp"
#include "quip/simulate.hpp"
#include "quip/synthesis.hpp"
#include "quip/walsh.hpp"

namespace quip {

struct EncodeResult {
  Circuit circuit;
  VectorizedImage vectorized;
  std::vector<CompressionReport> plane_reports;
};

/// Full encode pipeline: vectorize, map to angles, solve, compress each
/// plane independently, and synthesize the parity-cancelled circuit.
/// At level 0 only exact-zero coefficients drop out, so the circuit still
/// prepares the exact state.
inline EncodeResult encode_image(const ImageBuffer& img, Mapping mapping,
                                 double compression_percent) {
  EncodeResult result;
  result.vectorized = vectorize(img, mapping);
  EncodingSpec& spec = result.vectorized.spec;
  spec.compression_percent = compression_percent;

  auto planes = encoding_planes(result.vectorized);
  Circuit& circuit = result.circuit;
  circuit.num_qubits = spec.total_qubits();
  circuit.encoding = spec;
  for (unsigned q = 0; q < spec.position_qubits; ++q) circuit.gates.push_back(Gate::h(q));

  std::vector<unsigned> controls(spec.position_qubits);
  std::iota(controls.begin(), controls.end(), 0u);

  for (unsigned p = 0; p < planes.size(); ++p) {
    AngleVector& plane = planes[p];
    solve_angles(plane);
    CompressionReport report = compress_coefficients(plane, compression_percent);
    const auto fragment = synth_compressed_ucry(plane, controls, spec.position_qubits + p);
    std::size_t cnot_count = 0;
    for (const Gate& g : fragment) {
      if (g.kind == GateKind::cnot) ++cnot_count;
    }
    // Uncompressed, each plane carries one CNOT per coefficient.
    report.cnot_removed = spec.padded_pixel_count > 1
                              ? spec.padded_pixel_count - cnot_count
                              : 0;
    circuit.gates.insert(circuit.gates.end(), fragment.begin(), fragment.end());
    result.plane_reports.push_back(report);
  }
  return result;
}

/// Sums the per-plane reports; the threshold becomes the largest magnitude
/// zeroed on any plane.
inline CompressionReport aggregate_report(const std::vector<CompressionReport>& planes) {
  CompressionReport total;
  for (const CompressionReport& r : planes) {
    total.level_percent = r.level_percent;
    total.coefficients_total += r.coefficients_total;
    total.coefficients_kept += r.coefficients_kept;
    total.ry_removed += r.ry_removed;
    total.cnot_removed += r.cnot_removed;
    total.threshold_magnitude = std::max(total.threshold_magnitude, r.threshold_magnitude);
  }
  return total;
}

struct RoundtripResult {
  EncodeResult encoded;
  Statevector state;
  ImageBuffer reconstructed;
  QualityMetrics quality;  // fidelity vs the exact encoding state, psnr vs the input
};

/// Encode, simulate, reconstruct; quality holds the state fidelity against
/// the analytically built target and the image-domain PSNR/MSE.
inline RoundtripResult roundtrip_image(const ImageBuffer& img, Mapping mapping,
                                       double compression_percent,
                                       unsigned qubit_limit = detail::kDefaultQubitLimit) {
  RoundtripResult result;
  result.encoded = encode_image(img, mapping, compression_percent);
  result.state = simulate(result.encoded.circuit, qubit_limit);
  const Statevector target = oracle_state(result.encoded.vectorized, qubit_limit);
  const QualityMetrics state_metrics = compare(result.state, target);
  Reconstruction recon = reconstruct(result.encoded.vectorized.spec, result.state, &img);
  result.reconstructed = std::move(recon.image);
  result.quality = recon.metrics;
  result.quality.fidelity = state_metrics.fidelity;
  result.quality.max_amp_error = state_metrics.max_amp_error;
  return result;
}

}  // namespace quip
