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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bqc/simcore/ops.hpp"

namespace bqc::steane {

inline constexpr int kBlockSize = 7;

/// Seven data wires. Position i of every Pauli word acts on wires[i].
struct CodeBlock {
  std::array<int, kBlockSize> wires{};

  static CodeBlock contiguous(int first);
  bool overlaps(const CodeBlock& other) const;
};

/// Pauli word over the block positions, written as a 7-letter string.
struct PauliWord {
  std::string name;
  std::array<Pauli, kBlockSize> letters{};

  Pauli type() const;  // X or Z for the stabilizer words
  std::vector<int> support() const;
  std::string str() const;
};

enum class Stabilizer { K1, K2, K3, K4, K5, K6 };

const PauliWord& stabilizer_word(Stabilizer k);
const std::array<Stabilizer, 6>& all_stabilizers();

/// Operators that ft_measure_operator understands. Magic is the Clifford
/// e^{-i pi/4} S X whose +1 eigenstate is the magic state.
enum class LogicalOperator { K1, K2, K3, K4, K5, K6, XL, ZL, Magic };

std::string_view operator_name(LogicalOperator op);
LogicalOperator from_stabilizer(Stabilizer k);

/// Support positions (0-based) of the operator on the block.
std::vector<int> operator_support(LogicalOperator op);

/// Error position (0-based) named by a 3-bit syndrome, or nullopt for 000.
/// bits[i] is the outcome of the i-th stabilizer of one type. The table is
/// built from the stabilizer supports: a single-qubit error at position p
/// flips exactly the stabilizers that contain p.
std::optional<int> syndrome_position(const std::array<int, 3>& bits);

/// Syndrome a single error at the given 0-based position produces.
std::array<int, 3> syndrome_of_position(int position);

/// Bit strings (wire 0 first) that appear in |0>_L, or in |1>_L when logical
/// is 1. Eight each, equal weights.
const std::vector<std::uint8_t>& codewords(int logical);

/// Classical decode of a transversal Z readout: corrects one flipped bit with
/// the Z-type checks and returns the parity.
int decode_readout(std::uint8_t bits);

}  // namespace bqc::steane
