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

#include "bqc/simcore/gate.hpp"

#include <algorithm>

#include "bqc/errors.hpp"

namespace bqc {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int arity;
};

constexpr std::array<KindInfo, 14> kKinds{{
    {GateKind::I, "I", 1},
    {GateKind::H, "H", 1},
    {GateKind::X, "X", 1},
    {GateKind::Z, "Z", 1},
    {GateKind::S, "S", 1},
    {GateKind::Sdg, "SDG", 1},
    {GateKind::T, "T", 1},
    {GateKind::Tdg, "TDG", 1},
    {GateKind::Rz, "RZ", 1},
    {GateKind::CNOT, "CNOT", 2},
    {GateKind::CZ, "CZ", 2},
    {GateKind::CPhase, "CPHASE", 2},
    {GateKind::SWAP, "SWAP", 2},
    {GateKind::Toffoli, "TOFFOLI", 3},
}};

const KindInfo& info(GateKind kind) {
  return *std::find_if(kKinds.begin(), kKinds.end(), [&](const KindInfo& i) { return i.kind == kind; });
}

}  // namespace

int arity(GateKind kind) noexcept { return info(kind).arity; }

std::string_view gate_name(GateKind kind) noexcept { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "NOT") upper = "X";
  if (upper == "CX") upper = "CNOT";
  if (upper == "CCX" || upper == "CCNOT") upper = "TOFFOLI";
  if (upper == "SDAG" || upper == "S_DAG") upper = "SDG";
  if (upper == "TDAG" || upper == "T_DAG") upper = "TDG";
  for (const auto& k : kKinds)
    if (k.name == upper) return k.kind;
  return std::nullopt;
}

bool is_diagonal(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::I:
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rz: return true;
    default: return false;
  }
}

void validate(const Gate& g) {
  const int n = g.arity();
  for (int i = 0; i < n; ++i) {
    if (g.wires[i] < 0) throw ArgumentError(std::string(gate_name(g.kind)) + ": missing operand");
    for (int j = 0; j < i; ++j)
      if (g.wires[i] == g.wires[j]) throw ArgumentError(std::string(gate_name(g.kind)) + ": operands must be distinct");
  }
  for (int i = n; i < 3; ++i)
    if (g.wires[i] != -1) throw ArgumentError(std::string(gate_name(g.kind)) + ": too many operands");
}

Gate inverse(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::S: out.kind = GateKind::Sdg; break;
    case GateKind::Sdg: out.kind = GateKind::S; break;
    case GateKind::T: out.kind = GateKind::Tdg; break;
    case GateKind::Tdg: out.kind = GateKind::T; break;
    case GateKind::Rz: out.angle = -g.angle; break;
    case GateKind::CPhase:
      // controlled-S^dagger has no kind of its own; callers that need it
      // decompose first.
      throw UnsupportedGateError("inverse of CPHASE is not a primitive kind");
    default: break;
  }
  return out;
}

}  // namespace bqc
