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
#include <map>
#include <utility>
#include <vector>

#include "bqc/compiler/circuit.hpp"

namespace bqc::compiler {

/// Where each adder register lives. a and b hold the inputs; b ends up
/// holding the low bits of a + b and carry[bits-1] the top bit. carry[j]
/// is the carry into bit j+1. Ancillas start and end at 0.
struct QclaWires {
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> carry;
  std::map<std::pair<int, int>, int> propagate;  // (round, index) -> wire
  int wire_count = 0;
};

/// Ancilla count of the carry network: bits - popcount(bits) - floor(log2 bits).
int qcla_ancillas(int bits);

/// In-place logarithmic-depth carry-lookahead adder. Wires are grouped per
/// bit position: a_i, b_i, carry_i, followed by any propagate ancilla whose
/// block ends at bit i. bits = 10 gives 35 wires.
CircuitIR qcla_adder(int bits, QclaWires* wires = nullptr);

/// Runs the adder classically: returns a + b (bits+1 bits) and checks that
/// a is restored and every ancilla returned to 0.
std::uint64_t qcla_add(const CircuitIR& adder, const QclaWires& wires, std::uint64_t a, std::uint64_t b);

}  // namespace bqc::compiler
