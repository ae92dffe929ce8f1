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

#include "bqc/compiler/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "bqc/errors.hpp"

namespace bqc::compiler {

CircuitIR& CircuitIR::add(const Gate& g) {
  gates.push_back(g);
  return *this;
}

void check_circuit(const CircuitIR& c) {
  for (const auto& g : c.gates) {
    validate(g);
    for (int i = 0; i < g.arity(); ++i)
      if (g.wires[i] >= c.wire_count)
        throw ArgumentError(std::string(gate_name(g.kind)) + ": wire " + std::to_string(g.wires[i]) +
                            " outside the circuit");
  }
}

GateTally tally(const CircuitIR& c) {
  GateTally t;
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::I: break;
      case GateKind::T:
      case GateKind::Tdg: ++t.t_count; break;
      case GateKind::Rz:
        if (g.angle.k() % 2)
          ++t.t_count;
        else if (g.angle.k() != 0)
          ++t.one_qubit_clifford;
        break;
      case GateKind::H: ++t.hadamard, ++t.one_qubit_clifford; break;
      case GateKind::X: ++t.not_gates, ++t.one_qubit_clifford; break;
      case GateKind::Z:
      case GateKind::S:
      case GateKind::Sdg: ++t.one_qubit_clifford; break;
      case GateKind::CNOT: ++t.cnot, ++t.two_qubit_clifford; break;
      case GateKind::CZ:
      case GateKind::CPhase: ++t.two_qubit_clifford; break;
      case GateKind::SWAP: ++t.swap; break;
      case GateKind::Toffoli: ++t.toffoli; break;
    }
  }
  return t;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<int> to_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

CircuitIR parse_circuit(const std::string& text) {
  CircuitIR c;
  std::map<std::string, int> names;
  bool declared = false;
  int max_wire = -1;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto words = split(line);
    if (words.empty()) continue;
    std::string head = words[0];
    for (auto& ch : head) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (head == "wires") {
      auto n = words.size() == 2 ? to_int(words[1]) : std::nullopt;
      if (!n || *n < 0) throw ParseError(lineno, "expected `wires N`");
      c.wire_count = *n;
      declared = true;
      continue;
    }
    if (head == "wire") {
      if (words.size() != 2 || to_int(words[1])) throw ParseError(lineno, "expected `wire NAME`");
      if (names.count(words[1])) throw ParseError(lineno, "wire " + words[1] + " declared twice");
      const int id = static_cast<int>(names.size());
      names[words[1]] = id;
      c.wire_names.resize(id + 1);
      c.wire_names[id] = words[1];
      max_wire = std::max(max_wire, id);
      continue;
    }
    const auto kind = gate_kind_from_name(words[0]);
    if (!kind) throw ParseError(lineno, "unknown gate `" + words[0] + "`");
    Gate g{*kind, {-1, -1, -1}, {}};
    std::size_t next = 1;
    if (*kind == GateKind::Rz) {
      auto k = next < words.size() ? to_int(words[next]) : std::nullopt;
      if (!k) throw ParseError(lineno, "RZ needs an octant before its wire");
      g.angle = Octant(*k);
      ++next;
    }
    const int ar = arity(*kind);
    if (words.size() - next != static_cast<std::size_t>(ar))
      throw ParseError(lineno, std::string(gate_name(*kind)) + " takes " + std::to_string(ar) + " wire(s)");
    for (int i = 0; i < ar; ++i) {
      const auto& w = words[next + i];
      if (auto v = to_int(w)) {
        if (*v < 0) throw ParseError(lineno, "negative wire index");
        g.wires[i] = *v;
      } else if (auto it = names.find(w); it != names.end()) {
        g.wires[i] = it->second;
      } else {
        throw ParseError(lineno, "unknown wire `" + w + "`");
      }
      max_wire = std::max(max_wire, g.wires[i]);
    }
    try {
      validate(g);
    } catch (const ArgumentError& e) {
      throw ParseError(lineno, e.what());
    }
    if (declared && max_wire >= c.wire_count)
      throw ParseError(lineno, "wire " + std::to_string(max_wire) + " outside the declared " +
                                   std::to_string(c.wire_count));
    c.gates.push_back(g);
  }
  if (!declared) c.wire_count = max_wire + 1;
  if (!c.wire_names.empty()) c.wire_names.resize(c.wire_count);
  return c;
}

std::string write_circuit(const CircuitIR& c) {
  std::ostringstream out;
  out << "# bqc circuit v1\n";
  out << "wires " << c.wire_count << '\n';
  // names are declared in wire order, so only a fully named list survives
  const bool named = !c.wire_names.empty() &&
                     std::none_of(c.wire_names.begin(), c.wire_names.end(), [](const auto& n) { return n.empty(); });
  if (named)
    for (const auto& n : c.wire_names) out << "wire " << n << '\n';
  for (const auto& g : c.gates) {
    out << gate_name(g.kind);
    if (g.kind == GateKind::Rz) out << ' ' << g.angle.k();
    for (int i = 0; i < g.arity(); ++i) {
      out << ' ';
      if (named)
        out << c.wire_names[g.wires[i]];
      else
        out << g.wires[i];
    }
    out << '\n';
  }
  return out.str();
}

void simulate_classical(const CircuitIR& c, std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != c.wire_count) throw ArgumentError("bit vector size differs from wire count");
  for (const auto& g : c.gates) {
    const auto& w = g.wires;
    switch (g.kind) {
      case GateKind::I: break;
      case GateKind::X: bits[w[0]] ^= 1; break;
      case GateKind::CNOT: bits[w[1]] ^= bits[w[0]]; break;
      case GateKind::SWAP: std::swap(bits[w[0]], bits[w[1]]); break;
      case GateKind::Toffoli: bits[w[2]] ^= bits[w[0]] & bits[w[1]]; break;
      default: throw UnsupportedGateError(std::string(gate_name(g.kind)) + " is not a classical reversible gate");
    }
  }
}

}  // namespace bqc::compiler
