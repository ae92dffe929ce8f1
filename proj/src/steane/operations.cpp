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

#include "bqc/steane/operations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bqc::steane {

namespace {

void check_ancillas(std::span<const int> ancillas, int needed) {
  if (static_cast<int>(ancillas.size()) < needed)
    throw ResourceLimitError("need " + std::to_string(needed) + " ancilla wires, have " +
                             std::to_string(ancillas.size()));
}

int majority(const std::array<int, 3>& v) { return (v[0] + v[1] + v[2]) >= 2 ? 1 : 0; }

// Controlled version of one position of the operator, cat wire as control.
void couple(Executor& ex, LogicalOperator op, int cat, int data) {
  if (op == LogicalOperator::Magic) {
    // controlled (e^{i pi/4} SDG X) = CNOT, then controlled S, then CZ, with
    // the phase kicked onto the control as T
    ex.gate(Gate::two(GateKind::CNOT, cat, data));
    ex.gate(Gate::two(GateKind::CPhase, cat, data));
    ex.gate(Gate::two(GateKind::CZ, cat, data));
    ex.gate(Gate::one(GateKind::T, cat));
    return;
  }
  const bool x_type = op == LogicalOperator::XL || op == LogicalOperator::K1 || op == LogicalOperator::K2 ||
                      op == LogicalOperator::K3;
  ex.gate(Gate::two(x_type ? GateKind::CNOT : GateKind::CZ, cat, data));
}

void reset_all(Executor& ex, std::span<const int> wires) {
  for (int w : wires) ex.reset(w);
}

// One verified cat plus coupling and decode; returns the eigenvalue bit.
int measure_once(Executor& ex, const CodeBlock& block, LogicalOperator op, std::span<const int> ancillas,
                 int& retries) {
  const auto support = operator_support(op);
  const int w = static_cast<int>(support.size());
  const auto cat = ancillas.first(w);
  const int verify = ancillas[w];
  int attempt = 0;
  while (prepare_cat(ex, cat, verify) != 0) {
    reset_all(ex, cat);
    ex.reset(verify);
    if (++attempt == kCatAttempts)
      throw FaultEscalationError("cat verification failed " + std::to_string(kCatAttempts) + " times");
    ++retries;
  }
  ex.reset(verify);
  for (int i = 0; i < w; ++i) couple(ex, op, cat[i], block.wires[support[i]]);
  for (int i = w - 2; i >= 0; --i) ex.gate(Gate::two(GateKind::CNOT, cat[i], cat[i + 1]));
  ex.gate(Gate::one(GateKind::H, cat[0]));
  const int bit = ex.measure(cat[0]);
  reset_all(ex, cat);
  return bit;
}

void check_disjoint(const CodeBlock& a, const CodeBlock& b) {
  if (a.overlaps(b)) throw ArgumentError("code blocks overlap");
}

}  // namespace

int prepare_cat(Executor& ex, std::span<const int> cat_wires, int verify_wire) {
  if (cat_wires.size() < 2) throw ArgumentError("cat state needs at least two wires");
  ex.gate(Gate::one(GateKind::H, cat_wires[0]));
  for (std::size_t i = 0; i + 1 < cat_wires.size(); ++i)
    ex.gate(Gate::two(GateKind::CNOT, cat_wires[i], cat_wires[i + 1]));
  ex.gate(Gate::two(GateKind::CNOT, cat_wires.front(), verify_wire));
  ex.gate(Gate::two(GateKind::CNOT, cat_wires.back(), verify_wire));
  return ex.measure(verify_wire);
}

FtMeasurement ft_measure_operator(Executor& ex, const CodeBlock& block, LogicalOperator op,
                                  std::span<const int> ancillas) {
  check_ancillas(ancillas, static_cast<int>(operator_support(op).size()) + 1);
  FtMeasurement m;
  for (int r = 0; r < 3; ++r) m.votes[r] = measure_once(ex, block, op, ancillas, m.cat_retries);
  m.bit = majority(m.votes);
  return m;
}

ZeroPrepRecord prepare_logical_zero(Executor& ex, const CodeBlock& block, std::span<const int> ancillas) {
  check_ancillas(ancillas, kAncillaWires);
  ZeroPrepRecord rec;
  std::array<int, 3> bits{};
  for (int i = 0; i < 3; ++i) {
    rec.measurements[i] = ft_measure_operator(ex, block, from_stabilizer(all_stabilizers()[i]), ancillas);
    bits[i] = rec.measurements[i].bit;
  }
  const auto pos = syndrome_position(bits);
  rec.corrected_position = pos.value_or(-1);
  ex.conditional(Gate::one(GateKind::Z, block.wires[pos.value_or(0)]), pos.has_value());
  return rec;
}

void transversal_gate(Executor& ex, GateKind kind, const CodeBlock& block) {
  GateKind physical = kind;
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Z: break;
    case GateKind::S: physical = GateKind::Sdg; break;
    case GateKind::Sdg: physical = GateKind::S; break;
    default: throw UnsupportedGateError(std::string(gate_name(kind)) + " is not a transversal one-block gate");
  }
  for (int w : block.wires) ex.gate(Gate::one(physical, w));
}

void transversal_gate(Executor& ex, GateKind kind, const CodeBlock& control, const CodeBlock& target) {
  if (kind != GateKind::CNOT && kind != GateKind::CZ)
    throw UnsupportedGateError(std::string(gate_name(kind)) + " is not a transversal two-block gate");
  check_disjoint(control, target);
  for (int i = 0; i < kBlockSize; ++i) ex.gate(Gate::two(kind, control.wires[i], target.wires[i]));
}

FtMeasurement prepare_magic(Executor& ex, const CodeBlock& block, std::span<const int> ancillas) {
  check_ancillas(ancillas, kAncillaWires);
  auto m = ft_measure_operator(ex, block, LogicalOperator::Magic, ancillas);
  for (int w : block.wires) ex.conditional(Gate::one(GateKind::Z, w), m.bit == 1);
  return m;
}

DestructiveMeasurement ft_measure_z_destructive(Executor& ex, const CodeBlock& block,
                                                std::span<const int> ancillas) {
  check_ancillas(ancillas, kAncillaWires);
  DestructiveMeasurement out;
  int retries = 0;
  for (int r = 0; r < 2; ++r) out.votes[r] = measure_once(ex, block, LogicalOperator::ZL, ancillas, retries);
  std::uint8_t readout = 0;
  for (int i = 0; i < kBlockSize; ++i)
    if (ex.measure(block.wires[i])) readout |= static_cast<std::uint8_t>(1u << (kBlockSize - 1 - i));
  out.votes[2] = decode_readout(readout);
  out.bit = majority(out.votes);
  reset_all(ex, block.wires);
  return out;
}

TGateRecord ft_t_gate(Executor& ex, const CodeBlock& data, const CodeBlock& magic, std::span<const int> ancillas) {
  check_disjoint(data, magic);
  transversal_gate(ex, GateKind::CNOT, magic, data);
  TGateRecord rec;
  rec.measurement = ft_measure_z_destructive(ex, data, ancillas);
  rec.z_bit = rec.measurement.bit;
  // (SX)_L: X_L first, then S_L as physical SDG
  for (int w : magic.wires) ex.conditional(Gate::one(GateKind::X, w), rec.z_bit == 1);
  for (int w : magic.wires) ex.conditional(Gate::one(GateKind::Sdg, w), rec.z_bit == 1);
  return rec;
}

Syndrome extract_and_correct(Executor& ex, const CodeBlock& block, std::span<const int> ancillas) {
  check_ancillas(ancillas, kAncillaWires);
  Syndrome s;
  for (int i = 0; i < 6; ++i) {
    const auto m = ft_measure_operator(ex, block, from_stabilizer(all_stabilizers()[i]), ancillas);
    (i < 3 ? s.x_bits[i] : s.z_bits[i - 3]) = m.bit;
    if (!m.unanimous()) ++s.disputed;
  }
  s.flagged = s.disputed > 1;
  const auto zpos = syndrome_position(s.x_bits);
  const auto xpos = syndrome_position(s.z_bits);
  s.z_fix_position = zpos.value_or(-1);
  s.x_fix_position = xpos.value_or(-1);
  ex.conditional(Gate::one(GateKind::Z, block.wires[zpos.value_or(0)]), zpos.has_value());
  ex.conditional(Gate::one(GateKind::X, block.wires[xpos.value_or(0)]), xpos.has_value());
  return s;
}

CodeBlock apply_logical_phase(Executor& ex, const CodeBlock& data, const CodeBlock& spare, Octant theta,
                              std::span<const int> ancillas) {
  static constexpr GateKind kClifford[4] = {GateKind::I, GateKind::S, GateKind::Z, GateKind::Sdg};
  const GateKind clifford = kClifford[theta.k() / 2];
  if (clifford != GateKind::I) transversal_gate(ex, clifford, data);
  if (theta.k() % 2 == 0) return data;
  check_disjoint(data, spare);
  prepare_logical_zero(ex, spare, ancillas);
  prepare_magic(ex, spare, ancillas);
  ft_t_gate(ex, data, spare, ancillas);
  return spare;
}

namespace {

// Index offset of each codeword bit pattern on a block.
std::uint64_t place(const StateVector& s, const CodeBlock& b, std::uint8_t word) {
  std::uint64_t idx = 0;
  for (int i = 0; i < kBlockSize; ++i)
    if ((word >> (kBlockSize - 1 - i)) & 1) idx |= s.mask(b.wires[i]);
  return idx;
}

void check_blocks(std::span<const CodeBlock> blocks, int n) {
  if (blocks.empty()) throw ArgumentError("no blocks to decode");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int w : blocks[i].wires)
      if (w < 0 || w >= n) throw IndexError("block wire outside the register");
    for (std::size_t j = 0; j < i; ++j) check_disjoint(blocks[i], blocks[j]);
  }
}

// Calls f(logical index, physical index, amplitude weight) for every
// codeword combination.
template <typename F>
void for_each_codeword(const StateVector& s, std::span<const CodeBlock> blocks, F&& f) {
  const int k = static_cast<int>(blocks.size());
  const double w = std::pow(1.0 / std::sqrt(8.0), k);
  std::vector<int> pick(k, 0);
  for (std::uint64_t logical = 0; logical < (std::uint64_t(1) << k); ++logical) {
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint64_t idx = 0;
      for (int j = 0; j < k; ++j) {
        const int bit = (logical >> (k - 1 - j)) & 1;
        idx |= place(s, blocks[j], codewords(bit)[pick[j]]);
      }
      f(logical, idx, w);
      int j = k - 1;
      while (j >= 0 && ++pick[j] == 8) pick[j--] = 0;
      if (j < 0) break;
    }
  }
}

}  // namespace

StateVector decode_to_logical(const StateVector& state, std::span<const CodeBlock> blocks) {
  check_blocks(blocks, state.num_qubits());
  StateVector::Amplitudes out = StateVector::Amplitudes::Zero(Eigen::Index(1) << blocks.size());
  for_each_codeword(state, blocks, [&](std::uint64_t logical, std::uint64_t idx, double w) {
    out(static_cast<Eigen::Index>(logical)) += w * state[static_cast<Eigen::Index>(idx)];
  });
  return StateVector::from_amplitudes(std::move(out));
}

StateVector encode_logical(const StateVector& logical, std::span<const CodeBlock> blocks, int total_wires) {
  if (logical.num_qubits() != static_cast<int>(blocks.size()))
    throw ArgumentError("logical state size does not match the block count");
  StateVector s(total_wires);
  check_blocks(blocks, total_wires);
  s.amplitudes().setZero();
  for_each_codeword(s, blocks, [&](std::uint64_t l, std::uint64_t idx, double w) {
    s.amplitudes()(static_cast<Eigen::Index>(idx)) += w * logical[static_cast<Eigen::Index>(l)];
  });
  return s;
}

}  // namespace bqc::steane
