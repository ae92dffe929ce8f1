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

#include "bqc/brickwork/patterns.hpp"

#include <cmath>
#include <map>
#include <string>

#include "bqc/errors.hpp"

namespace bqc::brickwork {

namespace {

using M2 = Matrix2<double>;

M2 j_matrix(Octant a) {
  return single_qubit_matrix<double>(GateKind::H) * single_qubit_matrix<double>(GateKind::Rz, -a);
}

RowAngles row(int a1, int a2, int a3, int a4) { return {Octant(a1), Octant(a2), Octant(a3), Octant(a4)}; }

struct Entry {
  M2 u;
  RowAngles angles;
};

// Every octant word of the given shape, in lexicographic angle order.
std::vector<Entry> enumerate(bool free_last) {
  std::vector<Entry> out;
  const int last = free_last ? 8 : 1;
  for (int a1 = 0; a1 < 8; ++a1)
    for (int a2 = 0; a2 < 8; ++a2)
      for (int a3 = 0; a3 < 8; ++a3)
        for (int a4 = 0; a4 < last; ++a4) {
          const auto r = row(a1, a2, a3, a4);
          out.push_back({row_unitary(r), r});
        }
  return out;
}

std::optional<RowAngles> find(const std::vector<Entry>& table, const M2& u) {
  for (const auto& e : table)
    if (equal_up_to_phase(e.u, u)) return e.angles;
  return std::nullopt;
}

Eigen::Matrix4cd kron2(const M2& a, const M2& b) {
  Eigen::Matrix4cd k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return k;
}

// Phase- and scale-free rounding of a 2x2 matrix, for hashing.
using Key = std::array<long long, 8>;

std::optional<Key> phase_key(const M2& m) {
  double top = 0;
  for (int i = 0; i < 4; ++i) top = std::max(top, std::abs(m(i)));
  if (top < 1e-9) return std::nullopt;
  std::complex<double> ref;
  for (int i = 0; i < 4; ++i)
    if (std::abs(m(i)) > top - 1e-7) {
      ref = m(i);
      break;
    }
  const double scale = std::sqrt(m.squaredNorm() / 2);
  const auto norm = std::conj(ref) / std::abs(ref) / scale;
  Key k;
  for (int i = 0; i < 4; ++i) {
    const auto v = m(i) * norm;
    k[2 * i] = std::llround(v.real() * 1e6);
    k[2 * i + 1] = std::llround(v.imag() * 1e6);
  }
  return k;
}

// The 64 words J(a2) J(a1) available to each half of a brick row.
struct WordTable {
  std::vector<M2> words;
  std::vector<std::array<Octant, 2>> angles;
  std::map<Key, std::vector<int>> lookup;
  std::vector<Eigen::Matrix4cd> undo;  // (A x A')^dag CZ for word pair (a, a')

  WordTable() {
    for (int a1 = 0; a1 < 8; ++a1)
      for (int a2 = 0; a2 < 8; ++a2) {
        words.push_back(j_matrix(Octant(a2)) * j_matrix(Octant(a1)));
        angles.push_back({Octant(a1), Octant(a2)});
        lookup[*phase_key(words.back())].push_back(static_cast<int>(words.size()) - 1);
      }
    Eigen::Matrix4cd cz = Eigen::Matrix4cd::Identity();
    cz(3, 3) = -1;
    for (const auto& a : words)
      for (const auto& b : words) undo.push_back(kron2(a, b).adjoint() * cz);
  }

  std::optional<int> find(const M2& m) const {
    const auto k = phase_key(m);
    if (!k) return std::nullopt;
    const auto it = lookup.find(*k);
    if (it == lookup.end()) return std::nullopt;
    for (int i : it->second)
      if (equal_up_to_phase(words[i], m / std::sqrt(m.squaredNorm() / 2), 1e-7)) return i;
    return std::nullopt;
  }
};

// Splits n into b x b' when it is a product of 2x2 operators.
std::optional<std::pair<M2, M2>> split_product(const Eigen::Matrix4cd& n) {
  int bi = 0, bj = 0;
  double best = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double v = n.block<2, 2>(2 * i, 2 * j).squaredNorm();
      if (v > best) best = v, bi = i, bj = j;
    }
  const M2 right = n.block<2, 2>(2 * bi, 2 * bj);
  const double rn = right.squaredNorm();
  M2 left;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const M2 blk = n.block<2, 2>(2 * i, 2 * j);
      left(i, j) = (right.adjoint() * blk).trace() / rn;
      if ((blk - left(i, j) * right).squaredNorm() > 1e-12) return std::nullopt;
    }
  return std::pair{left, right};
}

}  // namespace

std::optional<BrickPattern> realize_brick(const Eigen::Matrix4cd& u) {
  static const WordTable table;
  // u = CZ (B x B') CZ (A x A'), so CZ u (A x A')^dag CZ must split.
  Eigen::Matrix4cd czu = u;
  czu.row(3) *= -1;
  const int count = static_cast<int>(table.words.size());
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b) {
      const Eigen::Matrix4cd n = czu * table.undo[a * count + b];
      const auto parts = split_product(n);
      if (!parts) continue;
      const auto top = table.find(parts->first);
      if (!top) continue;
      const auto bottom = table.find(parts->second);
      if (!bottom) continue;
      BrickPattern p;
      p.top = {table.angles[a][0], table.angles[a][1], table.angles[*top][0], table.angles[*top][1]};
      p.bottom = {table.angles[b][0], table.angles[b][1], table.angles[*bottom][0], table.angles[*bottom][1]};
      return p;
    }
  return std::nullopt;
}

M2 row_unitary(const RowAngles& a) { return j_matrix(a[3]) * j_matrix(a[2]) * j_matrix(a[1]) * j_matrix(a[0]); }

bool equal_up_to_phase(const M2& a, const M2& b, double tol) {
  // |tr(a^dag b)| = 2 exactly when b = e^{i t} a for unitaries
  return std::abs(std::abs((a.adjoint() * b).trace()) - 2.0) < tol;
}

BrickPattern gate_pattern(GateKind kind) {
  BrickPattern p;
  p.kind = kind;
  switch (kind) {
    case GateKind::I: break;
    case GateKind::Z: p.top = row(4, 0, 0, 0); break;
    case GateKind::S: p.top = row(6, 0, 0, 0); break;
    case GateKind::Sdg: p.top = row(2, 0, 0, 0); break;
    case GateKind::T: p.top = row(7, 0, 0, 0); break;
    case GateKind::Tdg: p.top = row(1, 0, 0, 0); break;
    case GateKind::X: p.top = row(0, 4, 0, 0); break;
    case GateKind::H: p.top = row(6, 6, 6, 0); break;
    case GateKind::CNOT:
      p.top = row(0, 0, 2, 0);
      p.bottom = row(0, 2, 0, 6);
      break;
    default: throw ArgumentError(std::string(gate_name(kind)) + " has no brick pattern");
  }
  return p;
}

BrickPattern reversed_cnot_pattern() {
  auto p = gate_pattern(GateKind::CNOT);
  std::swap(p.top, p.bottom);
  return p;
}

Eigen::Matrix4cd brick_unitary(const BrickPattern& p) {
  auto kron = [](const M2& a, const M2& b) {
    Eigen::Matrix4cd k;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return k;
  };
  Eigen::Matrix4cd cz = Eigen::Matrix4cd::Identity();
  cz(3, 3) = -1;
  const M2 a_top = j_matrix(p.top[1]) * j_matrix(p.top[0]);
  const M2 a_bot = j_matrix(p.bottom[1]) * j_matrix(p.bottom[0]);
  const M2 b_top = j_matrix(p.top[3]) * j_matrix(p.top[2]);
  const M2 b_bot = j_matrix(p.bottom[3]) * j_matrix(p.bottom[2]);
  return cz * kron(b_top, b_bot) * cz * kron(a_top, a_bot);
}

std::optional<RowAngles> brick_row_angles(const M2& u) {
  static const std::vector<Entry> table = enumerate(false);
  return find(table, u);
}

std::optional<RowAngles> half_row_angles(const M2& u) {
  static const std::vector<Entry> table = enumerate(true);
  return find(table, u);
}

}  // namespace bqc::brickwork
