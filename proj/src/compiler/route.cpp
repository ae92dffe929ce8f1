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

#include <cstdlib>
#include <limits>
#include <string>

#include "bqc/errors.hpp"

namespace bqc::compiler {

namespace {

constexpr double kDecay = 0.8;
constexpr int kRolloutDistanceHorizon = 4;

struct Mapping {
  std::vector<int> pos;    // logical -> physical
  std::vector<int> owner;  // physical -> logical

  explicit Mapping(int n) : pos(n), owner(n) {
    for (int i = 0; i < n; ++i) pos[i] = owner[i] = i;
  }
  void swap_physical(int p, int q) {
    std::swap(owner[p], owner[q]);
    pos[owner[p]] = p;
    pos[owner[q]] = q;
  }
  int distance(int a, int b) const { return std::abs(pos[a] - pos[b]); }
};

// Brings logical a and b next to each other: a moves k steps toward b, b
// moves the rest. Calls on_swap(p, p+1) for each physical swap.
template <typename F>
void close_gap(Mapping& m, int a, int b, int k, F&& on_swap) {
  const int d = m.distance(a, b);
  const int dir = m.pos[b] > m.pos[a] ? 1 : -1;
  for (int i = 0; i < k; ++i) {
    const int p = m.pos[a];
    on_swap(std::min(p, p + dir), std::max(p, p + dir));
    m.swap_physical(p, p + dir);
  }
  for (int i = 0; i < d - 1 - k; ++i) {
    const int p = m.pos[b];
    on_swap(std::min(p, p - dir), std::max(p, p - dir));
    m.swap_physical(p, p - dir);
  }
}

// Distance-based split: the k whose mapping leaves the next `horizon`
// CNOTs (weighted by decay^j) closest together.
int split_by_distance(const Mapping& m, int a, int b, const CircuitIR& c, const std::vector<std::size_t>& cnots,
                      std::size_t from, int horizon) {
  const int d = m.distance(a, b);
  int best_k = d - 1;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int k = d - 1; k >= 0; --k) {
    Mapping trial = m;
    close_gap(trial, a, b, k, [](int, int) {});
    double cost = 0, weight = 1;
    for (std::size_t j = from; j < cnots.size() && j < from + horizon; ++j) {
      const auto& h = c.gates[cnots[j]];
      cost += weight * (trial.distance(h.wires[0], h.wires[1]) - 1);
      weight *= kDecay;
    }
    if (cost < best_cost - 1e-12) {
      best_cost = cost;
      best_k = k;
    }
  }
  return best_k;
}

// Swaps spent on the next `horizon` CNOTs, weighted by decay^j, when each is
// routed with the distance split.
double rollout(Mapping m, const CircuitIR& c, const std::vector<std::size_t>& cnots, std::size_t from, int horizon) {
  double cost = 0, weight = 1;
  for (std::size_t j = from; j < cnots.size() && j < from + horizon; ++j) {
    const int a = c.gates[cnots[j]].wires[0], b = c.gates[cnots[j]].wires[1];
    const int d = m.distance(a, b);
    if (d > 1) {
      close_gap(m, a, b, split_by_distance(m, a, b, c, cnots, j + 1, kRolloutDistanceHorizon), [](int, int) {});
      cost += weight * (d - 1);
    }
    weight *= kDecay;
  }
  return cost;
}

}  // namespace

RoutingResult insert_swaps(const CircuitIR& c, int lookahead) {
  check_circuit(c);
  for (const auto& g : c.gates)
    if (g.arity() > 2 || (g.arity() == 2 && g.kind != GateKind::CNOT))
      throw UnsupportedGateError(std::string(gate_name(g.kind)) + " must be decomposed before routing");
  RoutingResult res;
  res.circuit = CircuitIR(c.wire_count);
  Mapping m(c.wire_count);

  std::vector<std::size_t> cnots;
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    if (c.gates[i].kind == GateKind::CNOT) cnots.push_back(i);

  std::size_t next_cnot = 0;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    Gate g = c.gates[i];
    if (g.kind == GateKind::CNOT) {
      ++next_cnot;
      const int a = g.wires[0], b = g.wires[1];
      const int d = m.distance(a, b);
      if (d > 1) {
        // Each split is scored by the swaps the following CNOTs would cost.
        int best_k = d - 1;
        double best_cost = std::numeric_limits<double>::infinity();
        for (int k = d - 1; k >= 0; --k) {
          Mapping trial = m;
          close_gap(trial, a, b, k, [](int, int) {});
          const double cost = rollout(trial, c, cnots, next_cnot, lookahead);
          if (cost < best_cost - 1e-12) {
            best_cost = cost;
            best_k = k;
          }
        }
        close_gap(m, a, b, best_k, [&](int p, int q) {
          res.circuit.add(Gate::two(GateKind::CNOT, p, q));
          res.circuit.add(Gate::two(GateKind::CNOT, q, p));
          res.circuit.add(Gate::two(GateKind::CNOT, p, q));
          ++res.swaps;
        });
      }
    }
    for (int w = 0; w < g.arity(); ++w) g.wires[w] = m.pos[g.wires[w]];
    res.circuit.add(g);
  }
  res.final_position = m.pos;
  return res;
}

}  // namespace bqc::compiler
