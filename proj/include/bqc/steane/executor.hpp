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
#include <optional>
#include <vector>

#include "bqc/simcore/ops.hpp"

namespace bqc::steane {

/// Physical operation counts in the ledger's four categories, plus a
/// per-kind breakdown.
struct PhysicalTally {
  std::int64_t t_gates = 0;
  std::int64_t two_qubit = 0;
  std::int64_t one_qubit = 0;
  std::int64_t measurements = 0;
  std::map<GateKind, std::int64_t> by_kind;

  void add_gate(const Gate& g);
  void add_measurement() { ++measurements; }
  std::int64_t count(GateKind k) const;
  PhysicalTally& operator+=(const PhysicalTally& o);
  PhysicalTally operator-(const PhysicalTally& o) const;
  bool same_totals(std::int64_t t, std::int64_t two, std::int64_t one, std::int64_t meas) const {
    return t_gates == t && two_qubit == two && one_qubit == one && measurements == meas;
  }
};

/// Deterministic Pauli placed just before the physical operation with the
/// given index (gates and measurements that actually run are numbered from 0).
struct Fault {
  std::int64_t before_op = 0;
  int wire = 0;
  Pauli pauli = Pauli::X;
};

struct TraceEntry {
  std::int64_t op = 0;
  bool measurement = false;
  Gate gate;  // for measurements, kind I on the measured wire
};

/// Runs physical circuits on a state and counts them. Conditional
/// corrections count as scheduled slots whether or not they fire; the
/// executed tally holds only what ran.
class Executor {
 public:
  Executor(StateVector& state, Rng& rng) : state_(&state), rng_(&rng) {}

  void gate(const Gate& g);
  void conditional(const Gate& g, bool fire);
  int measure(int wire);
  /// Returns a wire to |0>; not counted.
  void reset(int wire);

  void schedule_fault(const Fault& f) { faults_.push_back(f); }
  /// Depolarizing probability applied after every executed gate on each of
  /// its operands.
  void set_gate_noise(double p) { gate_noise_ = p; }
  void enable_trace(bool on = true) { tracing_ = on; }

  std::int64_t op_index() const noexcept { return next_op_; }
  const PhysicalTally& executed() const noexcept { return executed_; }
  const PhysicalTally& scheduled() const noexcept { return scheduled_; }
  const std::vector<TraceEntry>& trace() const noexcept { return trace_; }
  std::int64_t injected_faults() const noexcept { return injected_; }

  StateVector& state() noexcept { return *state_; }
  Rng& rng() noexcept { return *rng_; }

 private:
  void before_op();
  void run(const Gate& g);

  StateVector* state_;
  Rng* rng_;
  PhysicalTally executed_;
  PhysicalTally scheduled_;
  std::vector<Fault> faults_;
  std::vector<TraceEntry> trace_;
  std::int64_t next_op_ = 0;
  std::int64_t injected_ = 0;
  double gate_noise_ = 0.0;
  bool tracing_ = false;
};

}  // namespace bqc::steane
