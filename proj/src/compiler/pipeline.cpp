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

#include <charconv>

#include "bqc/compiler/qcla.hpp"

namespace bqc::compiler {

namespace {

std::optional<int> suffix_number(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  name.remove_prefix(prefix.size());
  int v = 0;
  auto [p, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
  if (ec != std::errc() || p != name.data() + name.size() || v < 1) return std::nullopt;
  return v;
}

}  // namespace

std::optional<CircuitIR> builtin_circuit(std::string_view name) {
  if (name == "toffoli") {
    CircuitIR c(3);
    c.add(Gate::toffoli(0, 1, 2));
    return c;
  }
  if (auto bits = suffix_number(name, "qcla:")) return qcla_adder(*bits);
  if (auto wires = suffix_number(name, "identity:")) return CircuitIR(*wires);
  return std::nullopt;
}

Compilation compile(const CircuitIR& c) {
  Compilation out;
  out.source = c;
  out.decomposed = decompose(c);
  out.routed = insert_swaps(out.decomposed);
  out.placed = place_bricks(out.routed.circuit);
  return out;
}

}  // namespace bqc::compiler
