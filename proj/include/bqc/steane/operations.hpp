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

#include <array>
#include <span>
#include <vector>

#include "bqc/steane/code.hpp"
#include "bqc/steane/executor.hpp"

namespace bqc::steane {

/// Wires needed beyond the data blocks: 7 cat wires and one verifier.
inline constexpr int kAncillaWires = 8;

/// Attempts per repetition before cat verification gives up.
inline constexpr int kCatAttempts = 3;

/// H on the first cat wire, then a CNOT chain. Returns the verification bit
/// (parity of the first and last cat wires); 0 means the cat passed.
int prepare_cat(Executor& ex, std::span<const int> cat_wires, int verify_wire);

struct FtMeasurement {
  int bit = 0;
  std::array<int, 3> votes{};
  int cat_retries = 0;
  bool unanimous() const { return votes[0] == votes[1] && votes[1] == votes[2]; }
};

/// Three repetitions of a cat-coupled measurement of op on the block,
/// majority-voted. Each repetition decodes the cat and reads one wire.
FtMeasurement ft_measure_operator(Executor& ex, const CodeBlock& block, LogicalOperator op,
                                  std::span<const int> ancillas);

struct ZeroPrepRecord {
  std::array<FtMeasurement, 3> measurements;
  int corrected_position = -1;  // 0-based, -1 when no Z was needed
};

/// Block wires must hold |0>^7. Measures K1..K3 and fixes the signs with at
/// most one Z.
ZeroPrepRecord prepare_logical_zero(Executor& ex, const CodeBlock& block, std::span<const int> ancillas);

/// Position-wise gate. Logical S is realized by physical SDG on every wire
/// and logical SDG by physical S.
void transversal_gate(Executor& ex, GateKind kind, const CodeBlock& block);
void transversal_gate(Executor& ex, GateKind kind, const CodeBlock& control, const CodeBlock& target);

/// Block must hold |0>_L. Returns the magic-operator measurement.
FtMeasurement prepare_magic(Executor& ex, const CodeBlock& block, std::span<const int> ancillas);

struct DestructiveMeasurement {
  int bit = 0;
  std::array<int, 3> votes{};  // two cat repetitions and the decoded readout
};

/// Logical Z readout that consumes the block: two cat repetitions plus a
/// transversal readout vote. The block wires are reset to |0> afterwards.
DestructiveMeasurement ft_measure_z_destructive(Executor& ex, const CodeBlock& block,
                                                std::span<const int> ancillas);

struct TGateRecord {
  int z_bit = 0;
  DestructiveMeasurement measurement;
};

/// Magic block must hold the magic state. Afterwards the magic block carries
/// T applied to the data block's input and the data wires are back at |0>.
TGateRecord ft_t_gate(Executor& ex, const CodeBlock& data, const CodeBlock& magic, std::span<const int> ancillas);

struct Syndrome {
  std::array<int, 3> x_bits{};  // K1..K3, locate Z errors
  std::array<int, 3> z_bits{};  // K4..K6, locate X errors
  int disputed = 0;             // measurements whose votes disagreed
  bool flagged = false;         // more disagreement than one fault explains
  int z_fix_position = -1;
  int x_fix_position = -1;

  bool trivial() const { return x_bits == std::array<int, 3>{} && z_bits == std::array<int, 3>{}; }
};

Syndrome extract_and_correct(Executor& ex, const CodeBlock& block, std::span<const int> ancillas);

/// Logical R_z(theta) via the gate word I, T, S, TS, Z, TZ, SDG, TSDG.
/// T-containing words consume the spare block (which must hold |0>^7) and
/// return it as the new home of the logical qubit; otherwise returns data.
CodeBlock apply_logical_phase(Executor& ex, const CodeBlock& data, const CodeBlock& spare, Octant theta,
                              std::span<const int> ancillas);

/// Ideal decoder: projects the blocks onto the code space (every other wire
/// at |0>) and returns the unnormalized logical amplitudes, block 0 as the
/// most significant logical qubit.
StateVector decode_to_logical(const StateVector& state, std::span<const CodeBlock> blocks);

/// Ideal encoder for tests and exact-backend setup: writes the logical state
/// into the blocks of a fresh register of total_wires qubits.
StateVector encode_logical(const StateVector& logical, std::span<const CodeBlock> blocks, int total_wires);

}  // namespace bqc::steane
