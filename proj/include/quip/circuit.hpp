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

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quip/encoding.hpp"

namespace quip {

enum class GateKind { h, x, ry, cnot, mcry };

/// One gate. CNOT keeps its single positive control in `control`; the
/// multi-controlled RY (simulation-only) keeps its controls in two qubit
/// bitmasks: control_mask selects the control qubits, positive_mask the
/// subset that must read |1> (the rest are negative controls).
struct Gate {
  GateKind kind = GateKind::h;
  unsigned target = 0;
  unsigned control = 0;
  double angle = 0.0;
  std::uint64_t control_mask = 0;
  std::uint64_t positive_mask = 0;

  static Gate h(unsigned qubit) { return Gate{GateKind::h, qubit}; }
  static Gate x(unsigned qubit) { return Gate{GateKind::x, qubit}; }

  static Gate ry(double angle, unsigned qubit) {
    Gate g{GateKind::ry, qubit};
    g.angle = angle;
    return g;
  }

  static Gate cnot(unsigned control, unsigned target) {
    if (control == target) throw std::invalid_argument("cnot control equals target");
    Gate g{GateKind::cnot, target};
    g.control = control;
    return g;
  }

  static Gate mcry(std::uint64_t control_mask, std::uint64_t positive_mask, double angle,
                   unsigned target) {
    if ((positive_mask & ~control_mask) != 0) {
      throw std::invalid_argument("positive controls must be a subset of the controls");
    }
    if (control_mask & (std::uint64_t{1} << target)) {
      throw std::invalid_argument("mcry target cannot be a control");
    }
    Gate g{GateKind::mcry, target};
    g.angle = angle;
    g.control_mask = control_mask;
    g.positive_mask = positive_mask;
    return g;
  }
};

/// Ordered gate list over an explicit qubit count; gates run front to back.
struct Circuit {
  unsigned num_qubits = 0;
  std::vector<Gate> gates;
  EncodingSpec encoding;
};

struct GateCounts {
  std::size_t ry = 0;
  std::size_t cnot = 0;
  std::size_t h = 0;
  std::size_t x = 0;
  std::size_t mcry = 0;
  unsigned total_qubits = 0;

  bool operator==(const GateCounts&) const = default;
};

inline GateCounts count_gates(const Circuit& circuit) {
  GateCounts counts;
  counts.total_qubits = circuit.num_qubits;
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::h: ++counts.h; break;
      case GateKind::x: ++counts.x; break;
      case GateKind::ry: ++counts.ry; break;
      case GateKind::cnot: ++counts.cnot; break;
      case GateKind::mcry: ++counts.mcry; break;
    }
  }
  return counts;
}

namespace detail {

inline std::string format_angle(double angle) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", angle);
  return buffer;
}

}  // namespace detail

/// Writes the circuit as OPENQASM 2.0. State-preparation circuits only: one
/// quantum register, no classical registers, no measurements. The baseline
/// multi-controlled RY has no QASM form and is rejected.
inline void emit_qasm(const Circuit& circuit, std::ostream& os) {
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::mcry) {
      throw std::invalid_argument("multi-controlled ry gates cannot be exported to qasm");
    }
  }
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << circuit.num_qubits << "];\n";
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::h:
        os << "h q[" << g.target << "];\n";
        break;
      case GateKind::x:
        os << "x q[" << g.target << "];\n";
        break;
      case GateKind::ry:
        os << "ry(" << detail::format_angle(g.angle) << ") q[" << g.target << "];\n";
        break;
      case GateKind::cnot:
        os << "cx q[" << g.control << "],q[" << g.target << "];\n";
        break;
      case GateKind::mcry:
        break;  // rejected above
    }
  }
}

inline std::string qasm_string(const Circuit& circuit) {
  std::ostringstream os;
  emit_qasm(circuit, os);
  return os.str();
}

}  // namespace quip
