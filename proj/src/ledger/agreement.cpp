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

#include "bqc/ledger/agreement.hpp"

#include <array>
#include <numeric>

#include "bqc/steane/operations.hpp"

namespace bqc::ledger {

namespace {

CostVector to_cost(const steane::PhysicalTally& t) { return cost(t.t_gates, t.two_qubit, t.one_qubit, t.measurements); }

// Tally of what f schedules on ex.
template <typename F>
CostVector measure_cost(steane::Executor& ex, F&& f) {
  const auto before = ex.scheduled();
  f();
  return to_cost(ex.scheduled() - before);
}

}  // namespace

std::string AgreementRow::discrepancy() const {
  static const char* names[] = {"T", "2q", "1q", "meas"};
  std::string out;
  const auto d = (simulated - model).gates();
  for (int i = 0; i < 4; ++i)
    if (d[i] != Rational(0)) out += (out.empty() ? "" : ", ") + std::string(names[i]) + " " + (d[i] > Rational(0) ? "+" : "") + format_rational(d[i]);
  return out;
}

std::vector<AgreementRow> simulate_primitives(const CostModel& m, Rng& rng, bool with_t) {
  using steane::CodeBlock;
  const auto a = CodeBlock::contiguous(0);
  const auto b = CodeBlock::contiguous(7);
  std::array<int, steane::kAncillaWires> anc{};
  std::iota(anc.begin(), anc.end(), 14);
  StateVector s(14 + steane::kAncillaWires);
  steane::Executor ex(s, rng);

  std::vector<AgreementRow> rows;
  rows.push_back({"zero_prep", m.zero_prep, measure_cost(ex, [&] { steane::prepare_logical_zero(ex, a, anc); })});
  rows.push_back({"transversal_1q", m.transversal_1q,
                  measure_cost(ex, [&] { steane::transversal_gate(ex, GateKind::H, a); })});
  steane::prepare_logical_zero(ex, b, anc);
  rows.push_back({"transversal_2q", m.transversal_2q,
                  measure_cost(ex, [&] { steane::transversal_gate(ex, GateKind::CNOT, a, b); })});
  rows.push_back({"ft_meas_z", m.ft_meas_z, measure_cost(ex, [&] { steane::ft_measure_z_destructive(ex, b, anc); })});
  if (with_t) {
    rows.push_back({"ft_t", m.ft_t, measure_cost(ex, [&] {
                      steane::prepare_logical_zero(ex, b, anc);
                      steane::prepare_magic(ex, b, anc);
                      steane::ft_t_gate(ex, a, b, anc);
                    })});
  }
  return rows;
}

}  // namespace bqc::ledger
