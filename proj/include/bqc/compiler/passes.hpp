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

#include <optional>
#include <string_view>
#include <vector>

#include "bqc/brickwork/layout.hpp"
#include "bqc/compiler/circuit.hpp"

namespace bqc::compiler {

/// Rewrites into {H, X, Z, S, SDG, T, TDG, CNOT}. Toffoli uses the 7-T
/// network (2 H, 6 CNOT); SWAP becomes 3 CNOTs, CZ is H-conjugated CNOT,
/// RZ becomes its octant word and I disappears.
CircuitIR decompose(const CircuitIR& c);

struct RoutingResult {
  CircuitIR circuit;
  int swaps = 0;
  /// final_position[w] is the physical wire holding logical wire w at the
  /// end; the router does not undo the permutation.
  std::vector<int> final_position;
};

/// Makes every CNOT act on neighbouring wires by inserting SWAPs (emitted as
/// 3 CNOTs). For each distant CNOT the split of moves between its two ends is
/// chosen to minimise the distance of the next few CNOTs.
RoutingResult insert_swaps(const CircuitIR& c, int lookahead = 20);

struct PlacementResult {
  brickwork::BrickworkLayout layout{2, 1};
  int cnot_bricks = 0;
  int gate_rows = 0;  // brick or half-brick rows carrying a non-identity word
};

/// Packs an adjacent-CNOT circuit into bricks layer by layer. Runs of
/// single-qubit gates merge into one row when an octant word realizes their
/// product; a CNOT control row also absorbs a preceding run. Rows with
/// nothing ready get identity. A circuit on one wire is padded to two rows.
PlacementResult place_bricks(const CircuitIR& c);

/// Built-in circuits: `qcla:<bits>` (the carry-lookahead adder),
/// `toffoli` (one Toffoli on 3 wires) and `identity:<wires>` (no gates).
std::optional<CircuitIR> builtin_circuit(std::string_view name);

struct Compilation {
  CircuitIR source;
  CircuitIR decomposed;
  RoutingResult routed;
  PlacementResult placed;
};

/// decompose, insert_swaps, place_bricks.
Compilation compile(const CircuitIR& c);

}  // namespace bqc::compiler
