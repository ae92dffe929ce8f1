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
#include <optional>
#include <vector>

#include "bqc/simcore/gate.hpp"

namespace bqc::brickwork {

/// Four measurement angles along one row of a brick, in column order.
using RowAngles = std::array<Octant, 4>;

/// Angles for one brick. Single-qubit gates act on the top row and leave
/// the bottom row at identity; CNOT has its control on the top row.
struct BrickPattern {
  GateKind kind = GateKind::I;
  RowAngles top{};
  RowAngles bottom{};
};

/// Gates realizable on one brick: I, H, X, Z, S, SDG, T, TDG, CNOT.
BrickPattern gate_pattern(GateKind kind);

/// CNOT with control on the bottom row.
BrickPattern reversed_cnot_pattern();

/// Unitary of one row measured with the given angles (no rungs), up to
/// global phase: J(a4) J(a3) J(a2) J(a1) with J(a) = H R_z(-a).
Matrix2<double> row_unitary(const RowAngles& a);

/// Two-row brick unitary: CZ (B x B') CZ (A x A') with A = J(a2) J(a1) and
/// B = J(a4) J(a3) per row. Top row is the more significant qubit.
Eigen::Matrix4cd brick_unitary(const BrickPattern& p);

/// Angles for a row inside a brick (a4 = 0, so the rung commutes) that
/// realize u up to phase, if any octant word does. The unitary is
/// R_z(-a3) H R_z(-a2) H R_z(-a1).
std::optional<RowAngles> brick_row_angles(const Matrix2<double>& u);

/// Same for a half-brick row, where all four angles are free.
std::optional<RowAngles> half_row_angles(const Matrix2<double>& u);

/// Angles for one brick realizing a two-qubit unitary up to phase, found
/// by search over all octant words. kind is left as I.
std::optional<BrickPattern> realize_brick(const Eigen::Matrix4cd& u);

/// True when two 2x2 unitaries agree up to a global phase.
bool equal_up_to_phase(const Matrix2<double>& a, const Matrix2<double>& b, double tol = 1e-9);

}  // namespace bqc::brickwork
