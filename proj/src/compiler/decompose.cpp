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

#include "bqc/compiler/passes.hpp"

#include <string>

#include "bqc/errors.hpp"

namespace bqc::compiler {

namespace {

// Toffoli(x, y; z) is CCZ, as a CNOT parity network, between Hadamards on z: y collects x^y,
// x^y^z and y^z in turn, then z holds x^z. Each wire pair gets two CNOTs,
// and on a line x-y-z only the last two need routing.
void emit_toffoli(CircuitIR& out, int x, int y, int z) {
  using K = GateKind;
  out.add(Gate::one(K::H, z));
  out.add(Gate::one(K::T, x));
  out.add(Gate::one(K::T, y));
  out.add(Gate::one(K::T, z));
  out.add(Gate::two(K::CNOT, x, y));
  out.add(Gate::one(K::Tdg, y));
  out.add(Gate::two(K::CNOT, z, y));
  out.add(Gate::one(K::T, y));
  out.add(Gate::two(K::CNOT, x, y));
  out.add(Gate::one(K::Tdg, y));
  out.add(Gate::two(K::CNOT, z, y));
  out.add(Gate::two(K::CNOT, x, z));
  out.add(Gate::one(K::Tdg, z));
  out.add(Gate::two(K::CNOT, x, z));
  out.add(Gate::one(K::H, z));
}

}  // namespace

CircuitIR decompose(const CircuitIR& c) {
  check_circuit(c);
  CircuitIR out(c.wire_count);
  out.wire_names = c.wire_names;
  using K = GateKind;
  for (const auto& g : c.gates) {
    const auto& w = g.wires;
    switch (g.kind) {
      case K::I: break;
      case K::H:
      case K::X:
      case K::Z:
      case K::S:
      case K::Sdg:
      case K::T:
      case K::Tdg:
      case K::CNOT: out.add(g); break;
      case K::Rz: {
        static constexpr K kClifford[4] = {K::I, K::S, K::Z, K::Sdg};
        if (auto k = kClifford[g.angle.k() / 2]; k != K::I) out.add(Gate::one(k, w[0]));
        if (g.angle.k() % 2) out.add(Gate::one(K::T, w[0]));
        break;
      }
      case K::CZ:
        out.add(Gate::one(K::H, w[1]));
        out.add(Gate::two(K::CNOT, w[0], w[1]));
        out.add(Gate::one(K::H, w[1]));
        break;
      case K::CPhase:
        out.add(Gate::one(K::T, w[0]));
        out.add(Gate::one(K::T, w[1]));
        out.add(Gate::two(K::CNOT, w[0], w[1]));
        out.add(Gate::one(K::Tdg, w[1]));
        out.add(Gate::two(K::CNOT, w[0], w[1]));
        break;
      case K::SWAP:
        out.add(Gate::two(K::CNOT, w[0], w[1]));
        out.add(Gate::two(K::CNOT, w[1], w[0]));
        out.add(Gate::two(K::CNOT, w[0], w[1]));
        break;
      case K::Toffoli: emit_toffoli(out, w[0], w[1], w[2]); break;
      default: throw UnsupportedGateError(std::string(gate_name(g.kind)) + " cannot be decomposed");
    }
  }
  return out;
}

}  // namespace bqc::compiler
