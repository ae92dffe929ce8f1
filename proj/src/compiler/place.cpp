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

#include <array>
#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>

#include "bqc/brickwork/patterns.hpp"
#include "bqc/errors.hpp"

namespace bqc::compiler {

namespace {

using brickwork::RowAngles;
using M2 = Matrix2<double>;

// Longest single-qubit run considered for merging into one row.
constexpr int kMaxRun = 12;
// Two CZ rungs cannot carry three CNOTs' worth of entanglement.
constexpr int kMaxBrickCnots = 2;
// Brick candidates are ranked by gates consumed, a CNOT counting this much extra.
constexpr int kCnotWeight = 2;

bool is_single(const Gate& g) { return g.arity() == 1; }

class Placer {
 public:
  explicit Placer(const CircuitIR& c) : c_(c), rows_(std::max(2, c.wire_count)), queues_(rows_) {
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      const auto& g = c.gates[i];
      if (g.kind == GateKind::I) continue;
      if (g.arity() == 2) {
        if (g.kind != GateKind::CNOT || std::abs(g.wires[0] - g.wires[1]) != 1)
          throw ArgumentError("placement needs CNOTs on neighbouring wires only");
      } else if (g.arity() != 1 || g.kind == GateKind::Rz) {
        throw UnsupportedGateError(std::string(gate_name(g.kind)) + " must be decomposed before placement");
      }
      for (int w = 0; w < g.arity(); ++w) queues_[g.wires[w]].push_back(i);
    }
  }

  PlacementResult run() {
    std::vector<std::vector<RowAngles>> layers;
    PlacementResult res;
    const brickwork::BrickworkLayout shape(rows_, 1);
    while (!done()) {
      const int layer = static_cast<int>(layers.size()) + 1;
      std::vector<RowAngles> angles(rows_);
      for (int row = 1; row <= rows_; ++row) {
        const auto partner = partner_of(layer, row);
        if (partner && *partner < row) continue;
        if (partner)
          fill_brick(row - 1, row, angles, res);
        else
          angles[row - 1] = take_run(row - 1, /*half=*/true, res);
      }
      layers.push_back(std::move(angles));
    }
    if (layers.empty()) layers.emplace_back(rows_);
    res.layout = brickwork::BrickworkLayout(rows_, static_cast<int>(layers.size()));
    for (std::size_t l = 0; l < layers.size(); ++l)
      for (int r = 0; r < rows_; ++r)
        for (int i = 0; i < 4; ++i) res.layout.set_angle({static_cast<int>(4 * l) + 1 + i, r + 1}, layers[l][r][i]);
    return res;
  }

 private:
  bool done() const {
    for (const auto& q : queues_)
      if (!q.empty()) return false;
    return true;
  }

  std::optional<int> partner_of(int layer, int row) const {
    const int first = layer % 2 == 1 ? 1 : 2;
    if (row < first) return std::nullopt;
    const int p = (row - first) % 2 == 0 ? row + 1 : row - 1;
    if (p < first || p > rows_) return std::nullopt;
    return p;
  }

  // Gate indices of the single-qubit run at the head of wire w, and the
  // gate after it, if any.
  std::vector<std::size_t> run_of(int w, std::optional<std::size_t>* after = nullptr) const {
    std::vector<std::size_t> run;
    std::size_t k = 0;
    while (k < queues_[w].size() && is_single(c_.gates[queues_[w][k]])) run.push_back(queues_[w][k++]);
    if (after) *after = k < queues_[w].size() ? std::optional(queues_[w][k]) : std::nullopt;
    return run;
  }

  M2 product(const std::vector<std::size_t>& run, std::size_t len) const {
    M2 u = M2::Identity();
    for (std::size_t i = 0; i < len; ++i) u = single_qubit_matrix<double>(c_.gates[run[i]].kind) * u;
    return u;
  }

  void pop(int w, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) queues_[w].pop_front();
  }

  RowAngles take_run(int w, bool half, PlacementResult& res) {
    const auto run = run_of(w);
    const std::size_t limit = std::min<std::size_t>(run.size(), kMaxRun);
    for (std::size_t len = limit; len >= 1; --len) {
      const auto u = product(run, len);
      const auto a = half ? brickwork::half_row_angles(u) : brickwork::brick_row_angles(u);
      if (a) {
        pop(w, len);
        ++res.gate_rows;
        return *a;
      }
    }
    return {};
  }

  // Gates at the head of wire w that stay on the pair (single-qubit gates
  // and CNOTs between top and bottom), up to kMaxRun of them.
  std::vector<std::size_t> local_prefix(int w, int top, int bottom) const {
    std::vector<std::size_t> out;
    for (std::size_t i : queues_[w]) {
      const auto& g = c_.gates[i];
      const bool local = is_single(g) || (std::min(g.wires[0], g.wires[1]) == top && std::max(g.wires[0], g.wires[1]) == bottom);
      if (!local || out.size() == kMaxRun) break;
      out.push_back(i);
    }
    return out;
  }

  void fill_brick(int top, int bottom, std::vector<RowAngles>& angles, PlacementResult& res) {
    const auto seq_top = local_prefix(top, top, bottom);
    const auto seq_bottom = local_prefix(bottom, top, bottom);
    // cnots_top[i] = shared CNOTs among the first i gates of the top row
    const auto count_cnots = [&](const std::vector<std::size_t>& seq) {
      std::vector<int> n{0};
      for (auto i : seq) n.push_back(n.back() + (is_single(c_.gates[i]) ? 0 : 1));
      return n;
    };
    const auto cnots_top = count_cnots(seq_top);
    const auto cnots_bottom = count_cnots(seq_bottom);

    struct Candidate {
      std::size_t i, j;
      int cnots;
      int score;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i <= seq_top.size(); ++i)
      for (std::size_t j = 0; j <= seq_bottom.size(); ++j) {
        const int k = cnots_top[i];
        if (k == 0 || k != cnots_bottom[j] || k > kMaxBrickCnots) continue;
        candidates.push_back({i, j, k, static_cast<int>(i + j) + kCnotWeight * k});
      }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return x.score > y.score; });

    // Best plain fill: independent single-qubit prefixes on each row.
    const int plain_top = longest_row_prefix(top, false);
    const int plain_bottom = longest_row_prefix(bottom, false);
    const int plain_score = plain_top + plain_bottom;

    for (const auto& cand : candidates) {
      if (cand.score <= plain_score) break;
      const auto u = pair_unitary(seq_top, seq_bottom, cand.i, cand.j, top);
      const auto pattern = realize(u);
      if (!pattern) continue;
      pop(top, cand.i);
      pop(bottom, cand.j);
      angles[top] = pattern->top;
      angles[bottom] = pattern->bottom;
      res.cnot_bricks += cand.cnots;
      res.gate_rows += 2;
      return;
    }
    angles[top] = take_run(top, false, res);
    angles[bottom] = take_run(bottom, false, res);
  }

  // Product of the first i gates of the top sequence and j of the bottom.
  Eigen::Matrix4cd pair_unitary(const std::vector<std::size_t>& seq_top, const std::vector<std::size_t>& seq_bottom,
                                std::size_t i, std::size_t j, int top) const {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    const M2 id = M2::Identity();
    std::size_t ti = 0, bj = 0;
    while (ti < i || bj < j) {
      if (ti < i && is_single(c_.gates[seq_top[ti]])) {
        u = kron(single_qubit_matrix<double>(c_.gates[seq_top[ti++]].kind), id) * u;
      } else if (bj < j && is_single(c_.gates[seq_bottom[bj]])) {
        u = kron(id, single_qubit_matrix<double>(c_.gates[seq_bottom[bj++]].kind)) * u;
      } else {
        const auto& g = c_.gates[seq_top[ti]];
        u = (g.wires[0] == top ? cnot_down() : cnot_up()) * u;
        ++ti;
        ++bj;
      }
    }
    return u;
  }

  static Eigen::Matrix4cd kron(const M2& a, const M2& b) {
    Eigen::Matrix4cd k;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) k.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
    return k;
  }

  static Eigen::Matrix4cd cnot_down() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    return m;
  }

  static Eigen::Matrix4cd cnot_up() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = m(3, 1) = m(2, 2) = m(1, 3) = 1;
    return m;
  }

  std::optional<brickwork::BrickPattern> realize(const Eigen::Matrix4cd& u) {
    // entries of circuits over this gate set are exact up to ~1e-15, so
    // rounding makes a reliable key
    std::vector<long long> key;
    key.reserve(32);
    // strip the phase by the first entry of largest magnitude
    double top = 0;
    for (int i = 0; i < 16; ++i) top = std::max(top, std::abs(u(i)));
    std::complex<double> ref;
    for (int i = 0; i < 16; ++i)
      if (std::abs(u(i)) > top - 1e-7) {
        ref = std::conj(u(i)) / std::abs(u(i));
        break;
      }
    for (int i = 0; i < 16; ++i) {
      key.push_back(std::llround((u(i) * ref).real() * 1e6));
      key.push_back(std::llround((u(i) * ref).imag() * 1e6));
    }
    const auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const auto p = brickwork::realize_brick(u);
    cache_.emplace(std::move(key), p);
    return p;
  }

  int longest_row_prefix(int w, bool half) const {
    const auto run = run_of(w);
    const std::size_t limit = std::min<std::size_t>(run.size(), kMaxRun);
    for (std::size_t len = limit; len >= 1; --len) {
      const auto u = product(run, len);
      if (half ? brickwork::half_row_angles(u) : brickwork::brick_row_angles(u)) return static_cast<int>(len);
    }
    return 0;
  }

  const CircuitIR& c_;
  int rows_;
  std::vector<std::deque<std::size_t>> queues_;
  std::map<std::vector<long long>, std::optional<brickwork::BrickPattern>> cache_;
};

}  // namespace

PlacementResult place_bricks(const CircuitIR& c) {
  check_circuit(c);
  return Placer(c).run();
}

}  // namespace bqc::compiler
