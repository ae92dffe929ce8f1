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

#include "bqc/compiler/qcla.hpp"

#include <bit>
#include <string>

#include "bqc/errors.hpp"

namespace bqc::compiler {

namespace {

int floor_log2(int x) { return x <= 0 ? -1 : std::bit_width(static_cast<unsigned>(x)) - 1; }

// Carry-lookahead network over `width` bit positions. Propagate bits of
// round 0 are b_i; G[j] is carry[j-1].
struct Network {
  const QclaWires& w;

  int p(int round, int m) const { return round == 0 ? w.b.at(m) : w.propagate.at({round, m}); }
  int g(int j) const { return w.carry.at(j - 1); }

  std::vector<Gate> gates(int width) const {
    std::vector<Gate> out;
    if (width < 1) return out;
    const int lg = floor_log2(width);
    std::vector<Gate> p_rounds;
    for (int t = 1; t <= lg - 1; ++t)
      for (int m = 1; m < (width >> t); ++m) p_rounds.push_back(Gate::toffoli(p(t - 1, 2 * m), p(t - 1, 2 * m + 1), p(t, m)));
    out.insert(out.end(), p_rounds.begin(), p_rounds.end());
    for (int t = 1; t <= lg; ++t)
      for (int m = 0; m < (width >> t); ++m)
        out.push_back(Gate::toffoli(g((m << t) + (1 << (t - 1))), p(t - 1, 2 * m + 1), g((m << t) + (1 << t))));
    for (int t = floor_log2(2 * width / 3); t >= 1; --t)
      for (int m = 1; m <= (width - (1 << (t - 1))) >> t; ++m)
        out.push_back(Gate::toffoli(g(m << t), p(t - 1, 2 * m), g((m << t) + (1 << (t - 1)))));
    out.insert(out.end(), p_rounds.rbegin(), p_rounds.rend());
    return out;
  }
};

}  // namespace

int qcla_ancillas(int bits) {
  if (bits < 1) return 0;
  int count = 0;
  for (int t = 1; t <= floor_log2(bits) - 1; ++t) count += (bits >> t) - 1;
  return count;
}

CircuitIR qcla_adder(int bits, QclaWires* wires_out) {
  if (bits < 1 || bits > 64) throw ArgumentError("adder width must be 1..64");
  QclaWires w;
  w.a.resize(bits);
  w.b.resize(bits);
  w.carry.resize(bits);
  // propagate ancilla (t, m) covers bits [m*2^t, (m+1)*2^t); it sits after
  // the last bit of that block
  std::map<int, std::vector<std::pair<int, int>>> after_bit;
  for (int t = 1; t <= floor_log2(bits) - 1; ++t)
    for (int m = 1; m < (bits >> t); ++m) after_bit[((m + 1) << t) - 1].push_back({t, m});
  int next = 0;
  std::vector<std::string> names;
  for (int i = 0; i < bits; ++i) {
    w.a[i] = next++;
    names.push_back("a" + std::to_string(i));
    w.b[i] = next++;
    names.push_back("b" + std::to_string(i));
    w.carry[i] = next++;
    names.push_back("z" + std::to_string(i + 1));
    for (auto key : after_bit[i]) {
      w.propagate[key] = next++;
      names.push_back("p" + std::to_string(key.first) + "_" + std::to_string(key.second));
    }
  }
  w.wire_count = next;

  CircuitIR c(w.wire_count);
  c.wire_names = names;
  const Network net{w};
  const int n = bits;
  for (int i = 0; i < n; ++i) c.add(Gate::toffoli(w.a[i], w.b[i], w.carry[i]));
  for (int i = 0; i < n; ++i) c.add(Gate::two(GateKind::CNOT, w.a[i], w.b[i]));
  for (const auto& g : net.gates(n)) c.add(g);
  for (int i = 1; i < n; ++i) c.add(Gate::two(GateKind::CNOT, w.carry[i - 1], w.b[i]));
  // clear carries 1..n-1: the carries of a + not(s) over n-1 bits equal them
  for (int i = 0; i < n - 1; ++i) c.add(Gate::one(GateKind::X, w.b[i]));
  for (int i = 1; i < n - 1; ++i) c.add(Gate::two(GateKind::CNOT, w.a[i], w.b[i]));
  const auto inner = net.gates(n - 1);
  for (auto it = inner.rbegin(); it != inner.rend(); ++it) c.add(*it);
  for (int i = 1; i < n - 1; ++i) c.add(Gate::two(GateKind::CNOT, w.a[i], w.b[i]));
  for (int i = 0; i < n - 1; ++i) c.add(Gate::toffoli(w.a[i], w.b[i], w.carry[i]));
  for (int i = 0; i < n - 1; ++i) c.add(Gate::one(GateKind::X, w.b[i]));
  if (wires_out) *wires_out = w;
  return c;
}

std::uint64_t qcla_add(const CircuitIR& adder, const QclaWires& w, std::uint64_t a, std::uint64_t b) {
  const int n = static_cast<int>(w.a.size());
  std::vector<std::uint8_t> bits(adder.wire_count, 0);
  for (int i = 0; i < n; ++i) {
    bits[w.a[i]] = (a >> i) & 1;
    bits[w.b[i]] = (b >> i) & 1;
  }
  simulate_classical(adder, bits);
  std::uint64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    if (bits[w.a[i]] != ((a >> i) & 1)) throw std::logic_error("adder did not restore a");
    sum |= std::uint64_t(bits[w.b[i]]) << i;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (bits[w.carry[i]]) throw std::logic_error("adder left a carry ancilla set");
  for (const auto& [key, wire] : w.propagate)
    if (bits[wire]) throw std::logic_error("adder left a propagate ancilla set");
  if (n < 64) sum |= std::uint64_t(bits[w.carry[n - 1]]) << n;
  return sum;
}

}  // namespace bqc::compiler
