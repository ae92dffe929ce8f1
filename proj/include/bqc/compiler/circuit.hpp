// Copyright 2026 The bqc-workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bqc/simcore/gate.hpp"

namespace bqc::compiler {

/// Ordered gate list over wire_count wires; wire i may carry a name.
struct CircuitIR {
  int wire_count = 0;
  std::vector<Gate> gates;
  std::vector<std::string> wire_names;  // empty or one per wire

  explicit CircuitIR(int wires = 0) : wire_count(wires) {}
  CircuitIR& add(const Gate& g);
  bool operator==(const CircuitIR&) const = default;
};

/// Throws ArgumentError on a gate outside the wire range or with bad operands.
void check_circuit(const CircuitIR& c);

struct GateTally {
  std::int64_t t_count = 0;             // T, TDG, odd RZ
  std::int64_t two_qubit_clifford = 0;  // CNOT, CZ, CPHASE
  std::int64_t one_qubit_clifford = 0;  // H, X, Z, S, SDG, even nonzero RZ
  std::int64_t toffoli = 0;
  std::int64_t swap = 0;
  std::int64_t measurements = 0;
  // breakdowns inside the categories above
  std::int64_t cnot = 0;
  std::int64_t not_gates = 0;
  std::int64_t hadamard = 0;

  bool operator==(const GateTally&) const = default;
};

GateTally tally(const CircuitIR& c);

/// Text format: optional `wires N` header, then one `GATE w1 [w2 [w3]]` per
/// line (RZ takes the octant first: `RZ k w`). `#` starts a comment. Wires
/// are integers or names declared with `wire NAME`.
CircuitIR parse_circuit(const std::string& text);
std::string write_circuit(const CircuitIR& c);

/// Runs a circuit of X, CNOT, SWAP and TOFFOLI on classical bits.
void simulate_classical(const CircuitIR& c, std::vector<std::uint8_t>& bits);

}  // namespace bqc::compiler
