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
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "bqc/simcore/octant.hpp"

namespace bqc {

enum class GateKind {
  I,
  H,
  X,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  Rz,
  CNOT,
  CZ,
  CPhase,
  SWAP,
  Toffoli,
};

int arity(GateKind kind) noexcept;
std::string_view gate_name(GateKind kind) noexcept;
std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept;

/// True for the kinds whose 2x2 matrix is diagonal (phase gates).
bool is_diagonal(GateKind kind) noexcept;

/// A gate on wire indices. For two- and three-qubit kinds the leading
/// operands are controls and the last is the target.
struct Gate {
  GateKind kind = GateKind::I;
  std::array<int, 3> wires{-1, -1, -1};
  Octant angle{};  // Rz only

  static Gate one(GateKind k, int w) { return Gate{k, {w, -1, -1}, {}}; }
  static Gate rz(Octant a, int w) { return Gate{GateKind::Rz, {w, -1, -1}, a}; }
  static Gate two(GateKind k, int a, int b) { return Gate{k, {a, b, -1}, {}}; }
  static Gate toffoli(int c1, int c2, int t) { return Gate{GateKind::Toffoli, {c1, c2, t}, {}}; }

  int arity() const noexcept { return bqc::arity(kind); }
  bool operator==(const Gate&) const = default;
};

/// Throws ArgumentError when operand count or distinctness is violated.
void validate(const Gate& g);

/// Inverse gate (same wires).
Gate inverse(const Gate& g);

template <typename Real>
using Matrix2 = Eigen::Matrix<std::complex<Real>, 2, 2>;

/// Phase e^{i k pi/4} for an octant.
template <typename Real>
std::complex<Real> octant_phase(Octant a) {
  return std::polar(Real(1), static_cast<Real>(a.radians()));
}

/// 2x2 matrix of a single-qubit kind. R_z(theta) = diag(1, e^{i theta}).
template <typename Real>
Matrix2<Real> single_qubit_matrix(GateKind kind, Octant angle = {}) {
  using C = std::complex<Real>;
  const Real r = Real(1) / std::sqrt(Real(2));
  Matrix2<Real> m;
  switch (kind) {
    case GateKind::I: m << C(1), C(0), C(0), C(1); break;
    case GateKind::H: m << C(r), C(r), C(r), C(-r); break;
    case GateKind::X: m << C(0), C(1), C(1), C(0); break;
    case GateKind::Z: m << C(1), C(0), C(0), C(-1); break;
    case GateKind::S: m << C(1), C(0), C(0), octant_phase<Real>(Octant(2)); break;
    case GateKind::Sdg: m << C(1), C(0), C(0), octant_phase<Real>(Octant(6)); break;
    case GateKind::T: m << C(1), C(0), C(0), octant_phase<Real>(Octant(1)); break;
    case GateKind::Tdg: m << C(1), C(0), C(0), octant_phase<Real>(Octant(7)); break;
    case GateKind::Rz: m << C(1), C(0), C(0), octant_phase<Real>(angle); break;
    default: m.setZero(); break;
  }
  return m;
}

}  // namespace bqc
