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

#include "bqc/steane/code.hpp"

#include <algorithm>
#include <bit>

#include "bqc/errors.hpp"

namespace bqc::steane {

namespace {

PauliWord parse_word(std::string name, std::string_view letters) {
  PauliWord w{std::move(name), {}};
  for (int i = 0; i < kBlockSize; ++i) {
    switch (letters[i]) {
      case 'X': w.letters[i] = Pauli::X; break;
      case 'Z': w.letters[i] = Pauli::Z; break;
      default: w.letters[i] = Pauli::I; break;
    }
  }
  return w;
}

const std::array<PauliWord, 6>& words() {
  static const std::array<PauliWord, 6> table{
      parse_word("K1", "IIIXXXX"), parse_word("K2", "XIXIXIX"), parse_word("K3", "IXXIIXX"),
      parse_word("K4", "IIIZZZZ"), parse_word("K5", "ZIZIZIZ"), parse_word("K6", "IZZIIZZ"),
  };
  return table;
}

std::uint8_t position_bit(int p) { return static_cast<std::uint8_t>(1u << (kBlockSize - 1 - p)); }

std::uint8_t support_mask(const PauliWord& w) {
  std::uint8_t m = 0;
  for (int p : w.support()) m |= position_bit(p);
  return m;
}

// Syndrome pattern (3 bits, first stabilizer most significant) -> position.
const std::array<int, 8>& position_table() {
  static const std::array<int, 8> table = [] {
    std::array<int, 8> t;
    t.fill(-1);
    for (int p = 0; p < kBlockSize; ++p) {
      const auto s = syndrome_of_position(p);
      const int key = (s[0] << 2) | (s[1] << 1) | s[2];
      if (key == 0 || t[key] != -1) throw std::logic_error("stabilizer words do not form a Hamming code");
      t[key] = p;
    }
    return t;
  }();
  return table;
}

}  // namespace

CodeBlock CodeBlock::contiguous(int first) {
  CodeBlock b;
  for (int i = 0; i < kBlockSize; ++i) b.wires[i] = first + i;
  return b;
}

bool CodeBlock::overlaps(const CodeBlock& other) const {
  for (int a : wires)
    if (std::find(other.wires.begin(), other.wires.end(), a) != other.wires.end()) return true;
  return false;
}

Pauli PauliWord::type() const {
  for (Pauli p : letters)
    if (p != Pauli::I) return p;
  return Pauli::I;
}

std::vector<int> PauliWord::support() const {
  std::vector<int> out;
  for (int i = 0; i < kBlockSize; ++i)
    if (letters[i] != Pauli::I) out.push_back(i);
  return out;
}

std::string PauliWord::str() const {
  std::string s;
  for (Pauli p : letters) s += pauli_char(p);
  return s;
}

const PauliWord& stabilizer_word(Stabilizer k) { return words()[static_cast<int>(k)]; }

const std::array<Stabilizer, 6>& all_stabilizers() {
  static constexpr std::array<Stabilizer, 6> all{Stabilizer::K1, Stabilizer::K2, Stabilizer::K3,
                                                 Stabilizer::K4, Stabilizer::K5, Stabilizer::K6};
  return all;
}

std::string_view operator_name(LogicalOperator op) {
  static constexpr std::string_view names[] = {"K1", "K2", "K3", "K4", "K5", "K6", "X_L", "Z_L", "MAGIC"};
  return names[static_cast<int>(op)];
}

LogicalOperator from_stabilizer(Stabilizer k) { return static_cast<LogicalOperator>(static_cast<int>(k)); }

std::vector<int> operator_support(LogicalOperator op) {
  const int i = static_cast<int>(op);
  if (i < 6) return words()[i].support();
  return {0, 1, 2, 3, 4, 5, 6};
}

std::array<int, 3> syndrome_of_position(int position) {
  if (position < 0 || position >= kBlockSize) throw IndexError("block position outside 0..6");
  std::array<int, 3> s{};
  for (int i = 0; i < 3; ++i) {
    const auto sup = words()[i].support();
    s[i] = std::find(sup.begin(), sup.end(), position) != sup.end() ? 1 : 0;
  }
  return s;
}

std::optional<int> syndrome_position(const std::array<int, 3>& bits) {
  const int key = ((bits[0] & 1) << 2) | ((bits[1] & 1) << 1) | (bits[2] & 1);
  if (key == 0) return std::nullopt;
  return position_table()[key];
}

const std::vector<std::uint8_t>& codewords(int logical) {
  static const std::array<std::vector<std::uint8_t>, 2> table = [] {
    const std::uint8_t g[3] = {support_mask(words()[0]), support_mask(words()[1]), support_mask(words()[2])};
    std::array<std::vector<std::uint8_t>, 2> t;
    for (int c = 0; c < 8; ++c) {
      std::uint8_t w = 0;
      for (int i = 0; i < 3; ++i)
        if ((c >> i) & 1) w ^= g[i];
      t[0].push_back(w);
      t[1].push_back(static_cast<std::uint8_t>(w ^ 0x7F));
    }
    std::sort(t[0].begin(), t[0].end());
    std::sort(t[1].begin(), t[1].end());
    return t;
  }();
  if (logical != 0 && logical != 1) throw ArgumentError("logical value must be 0 or 1");
  return table[logical];
}

int decode_readout(std::uint8_t bits) {
  std::array<int, 3> s{};
  for (int i = 0; i < 3; ++i) s[i] = std::popcount(static_cast<unsigned>(bits & support_mask(words()[3 + i]))) & 1;
  if (auto p = syndrome_position(s)) bits ^= position_bit(*p);
  return std::popcount(static_cast<unsigned>(bits)) & 1;
}

}  // namespace bqc::steane
