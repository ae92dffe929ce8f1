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

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "bqc/errors.hpp"
#include "bqc/simcore/gate.hpp"
#include "bqc/simcore/random.hpp"
#include "bqc/simcore/state_vector.hpp"

namespace bqc {

enum class Pauli { I, X, Y, Z };

char pauli_char(Pauli p) noexcept;

/// Applies the unitary of g to its operand wires.
template <typename Real>
StateVectorT<Real>& apply_gate(StateVectorT<Real>& s, const Gate& g) {
  validate(g);
  for (int i = 0; i < g.arity(); ++i) s.check_wire(g.wires[i]);
  using C = std::complex<Real>;
  switch (g.kind) {
    case GateKind::I: break;
    case GateKind::H:
    case GateKind::X:
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rz: s.apply_matrix(single_qubit_matrix<Real>(g.kind, g.angle), g.wires[0]); break;
    case GateKind::CNOT:
      s.apply_matrix(single_qubit_matrix<Real>(GateKind::X), g.wires[1], s.mask(g.wires[0]));
      break;
    case GateKind::CZ: s.apply_phase(s.mask(g.wires[0]) | s.mask(g.wires[1]), C(-1)); break;
    case GateKind::CPhase: s.apply_phase(s.mask(g.wires[0]) | s.mask(g.wires[1]), C(0, 1)); break;
    case GateKind::SWAP: s.apply_swap(g.wires[0], g.wires[1]); break;
    case GateKind::Toffoli:
      s.apply_matrix(single_qubit_matrix<Real>(GateKind::X), g.wires[2], s.mask(g.wires[0]) | s.mask(g.wires[1]));
      break;
  }
  return s;
}

/// Probability that the wire reads 1 in the computational basis.
template <typename Real>
Real probability_one(const StateVectorT<Real>& s, int wire) {
  Real p = 0;
  const auto& a = s.amplitudes();
  s.for_each_set(s.mask(wire), [&](std::uint64_t i) { p += std::norm(a(static_cast<Eigen::Index>(i))); });
  return p;
}

/// Projects the wire onto |bit> and renormalizes. Returns the branch
/// probability; a zero-probability branch leaves the state unnormalized.
template <typename Real>
Real project(StateVectorT<Real>& s, int wire, int bit) {
  const std::uint64_t m = s.mask(wire);
  auto& a = s.amplitudes();
  Real kept = 0;
  s.for_each_set(m, [&](std::uint64_t j) {
    const auto one = static_cast<Eigen::Index>(j), zero = static_cast<Eigen::Index>(j ^ m);
    kept += std::norm(a(bit ? one : zero));
    a(bit ? zero : one) = 0;
  });
  if (kept > Real(0) && std::abs(kept - Real(1)) > Real(1e-15)) a /= std::sqrt(kept);
  return kept;
}

/// Born-rule measurement in the computational basis; collapses the state.
template <typename Real>
int measure_z(StateVectorT<Real>& s, int wire, Rng& rng) {
  const Real p1 = probability_one(s, wire);
  const int bit = uniform01(rng) < static_cast<double>(p1) ? 1 : 0;
  project(s, wire, bit);
  return bit;
}

/// Measures in {|0> +- e^{i delta}|1>}: R_z(-delta), H, then Z. Outcome 0 is
/// the projection onto |0> + e^{i delta}|1>.
template <typename Real>
int measure_in_angle_basis(StateVectorT<Real>& s, int wire, Octant delta, Rng& rng) {
  apply_gate(s, Gate::rz(-delta, wire));
  apply_gate(s, Gate::one(GateKind::H, wire));
  return measure_z(s, wire, rng);
}

/// Applies a Pauli deterministically; Y = iXZ.
template <typename Real>
StateVectorT<Real>& inject_pauli(StateVectorT<Real>& s, int wire, Pauli p) {
  using C = std::complex<Real>;
  switch (p) {
    case Pauli::I: s.check_wire(wire); break;
    case Pauli::X: apply_gate(s, Gate::one(GateKind::X, wire)); break;
    case Pauli::Z: apply_gate(s, Gate::one(GateKind::Z, wire)); break;
    case Pauli::Y: {
      Matrix2<Real> y;
      y << C(0), C(0, -1), C(0, 1), C(0);
      s.apply_matrix(y, wire);
      break;
    }
  }
  return s;
}

/// With probability p injects a uniformly chosen X, Y or Z. Returns the
/// injected Pauli, if any.
template <typename Real>
std::optional<Pauli> depolarize(StateVectorT<Real>& s, int wire, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("depolarizing probability outside [0,1]");
  s.check_wire(wire);
  if (!bernoulli(rng, p)) return std::nullopt;
  static constexpr Pauli kChoices[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  const Pauli chosen = kChoices[uniform_int(rng, 0, 2)];
  inject_pauli(s, wire, chosen);
  return chosen;
}

/// |<a|b>|^2.
template <typename Real>
Real fidelity(const StateVectorT<Real>& a, const StateVectorT<Real>& b) {
  if (a.num_qubits() != b.num_qubits()) throw ArgumentError("fidelity of states with different qubit counts");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

struct AmplitudeEntry {
  std::uint64_t index;
  double re;
  double im;
};

/// Non-negligible amplitudes (|a| > 1e-12) sorted by basis index.
template <typename Real>
std::vector<AmplitudeEntry> debug_dump(const StateVectorT<Real>& s) {
  std::vector<AmplitudeEntry> out;
  const auto& a = s.amplitudes();
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (std::abs(a(i)) > 1e-12)
      out.push_back({static_cast<std::uint64_t>(i), static_cast<double>(a(i).real()), static_cast<double>(a(i).imag())});
  return out;
}

template <typename Real>
std::ostream& write_debug_dump(std::ostream& os, const StateVectorT<Real>& s) {
  for (const auto& e : debug_dump(s)) os << e.index << ' ' << e.re << ' ' << e.im << '\n';
  return os;
}

}  // namespace bqc
