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

#include "bqc/steane/executor.hpp"

namespace bqc::steane {

void PhysicalTally::add_gate(const Gate& g) {
  ++by_kind[g.kind];
  if (g.kind == GateKind::T || g.kind == GateKind::Tdg || (g.kind == GateKind::Rz && g.angle.k() % 2 == 1))
    ++t_gates;
  else if (g.arity() == 2)
    ++two_qubit;
  else if (g.arity() == 1)
    ++one_qubit;
  else
    throw UnsupportedGateError("physical tallies take one- and two-qubit gates only");
}

std::int64_t PhysicalTally::count(GateKind k) const {
  auto it = by_kind.find(k);
  return it == by_kind.end() ? 0 : it->second;
}

PhysicalTally& PhysicalTally::operator+=(const PhysicalTally& o) {
  t_gates += o.t_gates;
  two_qubit += o.two_qubit;
  one_qubit += o.one_qubit;
  measurements += o.measurements;
  for (const auto& [k, n] : o.by_kind) by_kind[k] += n;
  return *this;
}

PhysicalTally PhysicalTally::operator-(const PhysicalTally& o) const {
  PhysicalTally d = *this;
  d.t_gates -= o.t_gates;
  d.two_qubit -= o.two_qubit;
  d.one_qubit -= o.one_qubit;
  d.measurements -= o.measurements;
  for (const auto& [k, n] : o.by_kind) d.by_kind[k] -= n;
  return d;
}

void Executor::before_op() {
  for (const auto& f : faults_) {
    if (f.before_op == next_op_) {
      inject_pauli(*state_, f.wire, f.pauli);
      ++injected_;
    }
  }
}

void Executor::run(const Gate& g) {
  before_op();
  if (tracing_) trace_.push_back({next_op_, false, g});
  apply_gate(*state_, g);
  executed_.add_gate(g);
  ++next_op_;
  if (gate_noise_ > 0.0)
    for (int i = 0; i < g.arity(); ++i)
      if (depolarize(*state_, g.wires[i], gate_noise_, *rng_)) ++injected_;
}

void Executor::gate(const Gate& g) {
  scheduled_.add_gate(g);
  run(g);
}

void Executor::conditional(const Gate& g, bool fire) {
  scheduled_.add_gate(g);
  if (fire) run(g);
}

int Executor::measure(int wire) {
  before_op();
  if (tracing_) trace_.push_back({next_op_, true, Gate::one(GateKind::I, wire)});
  const int bit = measure_z(*state_, wire, *rng_);
  executed_.add_measurement();
  scheduled_.add_measurement();
  ++next_op_;
  return bit;
}

void Executor::reset(int wire) {
  // a wire already at |0> needs no collapse and draws no randomness
  if (probability_one(*state_, wire) < 1e-24) return;
  if (measure_z(*state_, wire, *rng_)) apply_gate(*state_, Gate::one(GateKind::X, wire));
}

}  // namespace bqc::steane
