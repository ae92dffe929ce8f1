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

#include "bqc/brickwork/mbqc.hpp"

#include <cmath>

#include "bqc/brickwork/patterns.hpp"
#include "bqc/errors.hpp"

namespace bqc::brickwork {

LazyBrickwork::Payload plus_payload(Octant theta) {
  const double r = 1 / std::sqrt(2.0);
  return {std::complex<double>(r), r * octant_phase<double>(theta)};
}

int parity(const MeasurementRecord& record, const std::vector<Site>& sites) {
  int p = 0;
  for (const auto& s : sites) {
    auto it = record.find(s);
    if (it == record.end())
      throw ArgumentError("dependency (" + std::to_string(s.column) + "," + std::to_string(s.row) +
                          ") not measured yet");
    p ^= it->second;
  }
  return p;
}

Octant flow_angle(const BrickworkLayout& layout, Site s, const MeasurementRecord& record) {
  return corrected_angle(layout.angle(s), parity(record, layout.x_dependencies(s)),
                         parity(record, layout.z_dependencies(s)));
}

LazyBrickwork::LazyBrickwork(int rows, int layers, Rng& rng) : geometry_(rows, layers), rng_(&rng) {}

void LazyBrickwork::set_payload(Site s, const Payload& amplitudes) {
  if (!geometry_.contains(s)) throw IndexError("payload site outside the layout");
  if (s.column <= attached_columns_) throw ArgumentError("column already attached");
  payloads_[s] = amplitudes;
}

void LazyBrickwork::set_input(const StateVector& column_one) {
  if (column_one.num_qubits() != geometry_.rows()) throw ArgumentError("input must have one qubit per row");
  if (attached_columns_ > 0) throw ArgumentError("column already attached");
  input_ = column_one;
}

int LazyBrickwork::wire_of(Site s) const {
  if (s.column < front_column_ || s.column > attached_columns_) throw ArgumentError("site is not live");
  const int n = geometry_.rows();
  if (s.column == front_column_) {
    if (s.row <= measured_in_front_) throw ArgumentError("site already measured");
    return s.row - 1 - measured_in_front_;
  }
  return (n - measured_in_front_) + (s.column - front_column_ - 1) * n + (s.row - 1);
}

void LazyBrickwork::attach_next_column() {
  const int c = attached_columns_ + 1;
  const int n = geometry_.rows();
  auto payload = [&](int r) {
    auto it = payloads_.find({c, r});
    return it != payloads_.end() ? it->second : plus_payload(Octant(0));
  };
  if (c == 1) {
    if (input_) {
      state_ = *input_;
    } else {
      auto p = payload(1);
      state_ = qubit_state<double>(p[0], p[1]);
      for (int r = 2; r <= n; ++r) {
        p = payload(r);
        state_.append_qubit(p[0], p[1]);
      }
    }
  } else {
    for (int r = 1; r <= n; ++r) {
      auto p = payload(r);
      state_.append_qubit(p[0], p[1]);
    }
  }
  attached_columns_ = c;
  for (int r = 1; r <= n; ++r) {
    payloads_.erase({c, r});
    if (c > 1) apply_gate(state_, Gate::two(GateKind::CZ, wire_of({c - 1, r}), wire_of({c, r})));
    if (auto p = geometry_.vertical_partner(c, r); p && *p > r)
      apply_gate(state_, Gate::two(GateKind::CZ, wire_of({c, r}), wire_of({c, *p})));
  }
  peak_ = std::max(peak_, state_.num_qubits());
}

int LazyBrickwork::measure(Site s, Octant delta) {
  if (s.column != front_column_ || s.row != measured_in_front_ + 1 || !geometry_.measured(s))
    throw ArgumentError("measurements must follow column-major order");
  if (attached_columns_ == 0) attach_next_column();
  if (attached_columns_ == s.column) attach_next_column();
  const int w = wire_of(s);
  const int bit = measure_in_angle_basis(state_, w, delta, *rng_);
  state_.remove_wire(w, bit);
  if (++measured_in_front_ == geometry_.rows()) {
    measured_in_front_ = 0;
    ++front_column_;
  }
  return bit;
}

void LazyBrickwork::inject(Site s, Pauli p) {
  if (s.column > attached_columns_) {
    auto it = payloads_.find(s);
    Payload a = it != payloads_.end() ? it->second : plus_payload(Octant(0));
    auto q = qubit_state<double>(a[0], a[1]);
    inject_pauli(q, 0, p);
    payloads_[s] = {q[0], q[1]};
    return;
  }
  inject_pauli(state_, wire_of(s), p);
}

const StateVector& LazyBrickwork::output() const {
  if (front_column_ != geometry_.output_column()) throw ArgumentError("measurements not finished");
  return state_;
}

StateVector LazyBrickwork::corrected_output(const BrickworkLayout& layout, const MeasurementRecord& record) const {
  StateVector out = output();
  const int c = layout.output_column();
  for (int r = 1; r <= layout.rows(); ++r) {
    if (parity(record, layout.x_dependencies({c, r}))) apply_gate(out, Gate::one(GateKind::X, r - 1));
    if (parity(record, layout.z_dependencies({c, r}))) apply_gate(out, Gate::one(GateKind::Z, r - 1));
  }
  return out;
}

MbqcResult run_mbqc(const BrickworkLayout& layout, const StateVector& input, Rng& rng,
                    const std::function<Octant(Site)>& prep_angle) {
  LazyBrickwork engine(layout.rows(), layout.layers(), rng);
  engine.set_input(input);
  if (prep_angle)
    for (int c = 2; c < layout.columns(); ++c)
      for (int r = 1; r <= layout.rows(); ++r) engine.set_payload({c, r}, plus_payload(prep_angle({c, r})));
  MbqcResult res{StateVector(1), {}};
  for (const Site s : layout.measurement_order()) {
    Octant delta = flow_angle(layout, s, res.record);
    if (prep_angle && s.column > 1) delta += prep_angle(s);
    res.record[s] = engine.measure(s, delta);
  }
  res.output = engine.corrected_output(layout, res.record);
  return res;
}

MbqcResult run_mbqc(const BrickworkLayout& layout, const std::vector<Octant>& input_angles, Rng& rng) {
  if (static_cast<int>(input_angles.size()) != layout.rows()) throw ArgumentError("one input angle per row");
  StateVector in = plus_state<double>(input_angles[0]);
  for (int r = 1; r < layout.rows(); ++r) {
    const auto p = plus_payload(input_angles[r]);
    in.append_qubit(p[0], p[1]);
  }
  return run_mbqc(layout, in, rng);
}

StateVector build_brickwork_state(const BrickworkLayout& layout, const std::vector<Octant>& input_angles,
                                  const std::function<Octant(Site)>& prep_angle, int cap) {
  if (layout.qubits() > cap)
    throw ResourceLimitError(std::to_string(layout.qubits()) + " qubits exceeds the simulator cap of " +
                             std::to_string(cap));
  if (static_cast<int>(input_angles.size()) != layout.rows()) throw ArgumentError("one input angle per row");
  const int n = layout.rows();
  auto wire = [n](Site s) { return (s.column - 1) * n + (s.row - 1); };
  StateVector state = plus_state<double>(input_angles[0]);
  for (int i = 1; i < layout.qubits(); ++i) {
    const Site s{i / n + 1, i % n + 1};
    const Octant theta = s.column == 1 ? input_angles[s.row - 1] : (prep_angle ? prep_angle(s) : Octant(0));
    const auto p = plus_payload(theta);
    state.append_qubit(p[0], p[1]);
  }
  for (const auto& [a, b] : layout.edges()) apply_gate(state, Gate::two(GateKind::CZ, wire(a), wire(b)));
  return state;
}

StateVector apply_layout_as_circuit(const BrickworkLayout& layout, StateVector state) {
  if (state.num_qubits() != layout.rows()) throw ArgumentError("state size differs from the row count");
  auto angles = [&](int layer, int row, int first) {
    const int c = 4 * (layer - 1) + 1 + first;
    return RowAngles{layout.angle({c, row}), layout.angle({c + 1, row}), Octant(0), Octant(0)};
  };
  for (int layer = 1; layer <= layout.layers(); ++layer)
    for (int row = 1; row <= layout.rows(); ++row) {
      const auto partner = layout.partner(layer, row);
      if (!partner) {
        const int c = 4 * (layer - 1) + 1;
        state.apply_matrix(row_unitary({layout.angle({c, row}), layout.angle({c + 1, row}), layout.angle({c + 2, row}),
                                        layout.angle({c + 3, row})}),
                           row - 1);
        continue;
      }
      if (*partner < row) continue;
      // J(0) = H, so the padded words reduce to J(a2) J(a1) and J(a4) J(a3)
      const Gate cz = Gate::two(GateKind::CZ, row - 1, row);
      state.apply_matrix(row_unitary(angles(layer, row, 0)), row - 1);
      state.apply_matrix(row_unitary(angles(layer, row + 1, 0)), row);
      apply_gate(state, cz);
      state.apply_matrix(row_unitary(angles(layer, row, 2)), row - 1);
      state.apply_matrix(row_unitary(angles(layer, row + 1, 2)), row);
      apply_gate(state, cz);
    }
  return state;
}

void place_pattern(BrickworkLayout& layout, int layer, int top_row, const BrickPattern& pattern) {
  if (layout.partner(layer, top_row) != top_row + 1) throw ArgumentError("rows do not form a brick in this layer");
  const int first = 4 * (layer - 1) + 1;
  for (int i = 0; i < 4; ++i) {
    layout.set_angle({first + i, top_row}, pattern.top[i]);
    layout.set_angle({first + i, top_row + 1}, pattern.bottom[i]);
  }
}

}  // namespace bqc::brickwork
