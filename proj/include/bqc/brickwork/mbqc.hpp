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
#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "bqc/brickwork/layout.hpp"
#include "bqc/brickwork/patterns.hpp"
#include "bqc/simcore/ops.hpp"

namespace bqc::brickwork {

/// Raw outcome bits of measured sites.
using MeasurementRecord = std::map<Site, int>;

/// XOR of recorded outcomes over a dependency set.
int parity(const MeasurementRecord& record, const std::vector<Site>& sites);

/// The angle a site is measured at in plain MBQC, given the outcomes so far.
Octant flow_angle(const BrickworkLayout& layout, Site s, const MeasurementRecord& record);

/// Executes a brickwork graph one column at a time: column c+1 is attached
/// and entangled just before column c is measured, so at most 2n qubits are
/// ever alive. Qubits are supplied as single-qubit payloads that stay
/// unentangled until their column is attached (every CZ touching a column
/// commutes with operations elsewhere, so the deferral is exact).
class LazyBrickwork {
 public:
  using Payload = std::array<std::complex<double>, 2>;

  LazyBrickwork(int rows, int layers, Rng& rng);

  /// Replaces the default |+> payload of a site.
  void set_payload(Site s, const Payload& amplitudes);
  /// Joint state for column 1 (n qubits, row 1 most significant); overrides
  /// the column-1 payloads.
  void set_input(const StateVector& column_one);

  /// Measures the next site in column-major order in the basis
  /// {|0> +- e^{i delta}|1>} and returns the raw outcome.
  int measure(Site s, Octant delta);

  /// Injects a Pauli on a site that is already attached, or on its payload.
  void inject(Site s, Pauli p);

  /// Final column, row 1 most significant, byproducts not yet removed.
  const StateVector& output() const;
  /// Final column after undoing X^{sx} Z^{sz} per the flow.
  StateVector corrected_output(const BrickworkLayout& layout, const MeasurementRecord& record) const;

  int peak_qubits() const noexcept { return peak_; }

 private:
  void attach_next_column();
  int wire_of(Site s) const;

  BrickworkLayout geometry_;
  Rng* rng_;
  std::map<Site, Payload> payloads_;
  std::optional<StateVector> input_;
  StateVector state_;
  int attached_columns_ = 0;  // highest column entangled into state_
  int front_column_ = 1;      // lowest live column
  int measured_in_front_ = 0; // rows of the front column already removed
  int peak_ = 0;
};

/// (|0> + e^{i theta}|1>)/sqrt(2).
LazyBrickwork::Payload plus_payload(Octant theta);

struct MbqcResult {
  StateVector output;
  MeasurementRecord record;
};

/// Plain MBQC: input joint state on column 1, every other qubit |+>. With
/// prep_angle, measured qubits past column 1 start rotated by it and their
/// measurement angle absorbs the rotation; the output column stays |+>.
MbqcResult run_mbqc(const BrickworkLayout& layout, const StateVector& input, Rng& rng,
                    const std::function<Octant(Site)>& prep_angle = {});

/// Column-1 qubits at (|0> + e^{i theta}|1>) per input_angles (row order).
MbqcResult run_mbqc(const BrickworkLayout& layout, const std::vector<Octant>& input_angles, Rng& rng);

/// Whole graph state at once: wire (c-1)*n + (r-1). Column-1 qubits use
/// input_angles, the rest prep_angle (default 0). Throws ResourceLimitError
/// above the simulator cap.
StateVector build_brickwork_state(const BrickworkLayout& layout, const std::vector<Octant>& input_angles,
                                  const std::function<Octant(Site)>& prep_angle = {},
                                  int cap = kDefaultQubitCap);

/// The gate circuit a layout stands for, applied to `state` (row 1 on wire
/// 0): per layer, each brick as (A x A'), CZ, (B x B'), CZ and each unpaired
/// row as its four-angle word.
StateVector apply_layout_as_circuit(const BrickworkLayout& layout, StateVector state);

/// Writes `pattern` into the brick of `layer` whose upper row is top_row.
void place_pattern(BrickworkLayout& layout, int layer, int top_row, const BrickPattern& pattern);

}  // namespace bqc::brickwork
