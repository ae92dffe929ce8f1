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

#include "bqc/ledger/estimate.hpp"

#include <numeric>

#include "bqc/errors.hpp"

namespace bqc::ledger {

namespace {

constexpr std::string_view kNames[] = {"bfk_basic", "protocol1", "protocol2", "ft_circuit", "bfk_ft_comparison"};

const char* kLinearGrowth =
    "BFK fault-tolerant variant: the brickwork state grows linearly with the computation because of the "
    "added swaps; no constants are available, so no totals are given";

const brickwork::Census& need_census(const EstimateInput& in) {
  if (!in.census) throw ArgumentError("this protocol needs a brickwork census");
  return *in.census;
}

// Bob's blind computation in the FT protocols, apart from the phase shifts.
CostVector ft_bob_fixed(const CostModel& m, const brickwork::Census& c) {
  return Rational(c.edges) * m.transversal_2q + Rational(c.measured) * (m.transversal_1q + m.ft_meas_z);
}

CostVector bfk_bob_fixed(const brickwork::Census& c) {
  return cost(0, c.edges, c.measured, c.measured);  // CZ per edge, H and measurement per qubit
}

CostVector weighted(const OctantCounts& counts, auto per_octant) {
  CostVector sum;
  for (int k = 0; k < 8; ++k) sum += Rational(counts[k]) * per_octant(Octant(k));
  return sum;
}

std::int64_t total(const OctantCounts& c) { return std::accumulate(c.begin(), c.end(), std::int64_t(0)); }

void expect_total(const OctantCounts& c, std::int64_t want, const char* what) {
  if (total(c) != want)
    throw ArgumentError(std::string(what) + " histogram covers " + std::to_string(total(c)) + " qubits, expected " +
                        std::to_string(want));
}

constexpr OctantCounts kEveryOctantOnce{1, 1, 1, 1, 1, 1, 1, 1};

// Physical octant phase in plain BFK: T when odd, plus a Clifford unless k/2 = 0.
CostVector bfk_phase(Octant k) { return cost(k.k() % 2, 0, k.k() / 2 != 0 ? 1 : 0, 0); }

Report blind_report(Protocol p, const brickwork::Census& c, const CostModel& m, const CostVector& alice_prep,
                    const CostVector& bob_phases, const CostVector& bob_prep) {
  Report r;
  r.protocol = p;
  switch (p) {
    case Protocol::BfkBasic: {
      auto alice = CostVector{};
      alice.transmitted = c.qubits;
      r.parties = {{"alice", alice}, {"bob", bfk_bob_fixed(c) + bob_phases}};
      r.notes.push_back("alice needs a random-phase single-qubit generator");
      break;
    }
    case Protocol::Protocol1: {
      auto alice = alice_prep;
      alice.transmitted = m.block_size * c.qubits;
      r.parties = {{"alice", alice}, {"bob", ft_bob_fixed(m, c) + bob_phases}};
      r.notes.push_back("alice runs a " + std::to_string(m.block_size + m.alice_ancillas) + "-qubit machine (" +
                        std::to_string(m.block_size) + " data + at least " + std::to_string(m.alice_ancillas) +
                        " ancillas)");
      break;
    }
    case Protocol::Protocol2: {
      const auto bob_compute = ft_bob_fixed(m, c) + bob_phases;
      auto alice = CostVector{};
      alice.transmitted = (m.bsa_logical_per_qubit + 1) * m.block_size * c.qubits;
      r.parties = {{"alice", alice},
                   {"bob_prep", bob_prep},
                   {"bob_compute", bob_compute},
                   {"bob", bob_prep + bob_compute}};
      r.notes.push_back("alice buffers at most " + std::to_string(m.bsa_logical_per_qubit * m.block_size) +
                        " physical qubits and runs no gates beyond local error correction");
      break;
    }
    default: throw ArgumentError("not a blind protocol");
  }
  return r;
}

}  // namespace

std::string_view protocol_name(Protocol p) noexcept { return kNames[static_cast<int>(p)]; }

std::optional<Protocol> protocol_from_name(std::string_view name) noexcept {
  for (int i = 0; i < 5; ++i)
    if (kNames[i] == name) return static_cast<Protocol>(i);
  return std::nullopt;
}

const CostVector& Report::party(std::string_view name) const {
  for (const auto& p : parties)
    if (p.party == name) return p.cost;
  throw ArgumentError("report has no party " + std::string(name));
}

Report estimate(Protocol p, const EstimateInput& in, const CostModel& m) {
  m.check_consistency();
  switch (p) {
    case Protocol::FtCircuit: {
      if (!in.tally) throw ArgumentError("ft_circuit needs a gate tally");
      const auto& t = *in.tally;
      if (t.toffoli || t.swap) throw ArgumentError("ft_circuit needs a decomposed tally");
      Report r;
      r.protocol = p;
      const auto c = Rational(t.t_count) * m.ft_t + Rational(t.two_qubit_clifford) * m.transversal_2q +
                     Rational(t.one_qubit_clifford) * m.transversal_1q + Rational(t.measurements) * m.ft_meas_z;
      r.parties = {{"circuit", c}};
      return r;
    }
    case Protocol::BfkFtComparison: {
      Report r;
      r.protocol = p;
      r.notes.push_back(kLinearGrowth);
      return r;
    }
    default: break;
  }
  const auto& c = need_census(in);
  const Rational qubits(c.qubits), measured(c.measured);
  const auto phases = p == Protocol::BfkBasic ? measured * (Rational(1, 8) * weighted(kEveryOctantOnce, bfk_phase)) : measured * m.phase_shift_avg;
  return blind_report(p, c, m, qubits * m.alice_prep_avg, phases,
                      Rational(m.bsa_logical_per_qubit) * qubits * m.alice_prep_avg);
}

Report estimate_per_octant(Protocol p, const brickwork::Census& c, const OctantCounts& prep,
                           const OctantCounts& measured, const CostModel& m) {
  m.check_consistency();
  expect_total(measured, c.measured, "measurement-angle");
  if (p == Protocol::BfkBasic) return blind_report(p, c, m, {}, weighted(measured, bfk_phase), {});
  const auto prep_cost = weighted(prep, [&](Octant k) { return alice_prep_cost(m, k); });
  const auto phases = weighted(measured, [&](Octant k) { return phase_shift_cost(m, k); });
  if (p == Protocol::Protocol1) {
    expect_total(prep, c.qubits, "preparation-angle");
    return blind_report(p, c, m, prep_cost, phases, {});
  }
  if (p == Protocol::Protocol2) {
    expect_total(prep, m.bsa_logical_per_qubit * c.qubits, "preparation-angle");
    return blind_report(p, c, m, {}, phases, prep_cost);
  }
  throw ArgumentError("per-octant mode applies to the blind protocols only");
}

Report estimate_sampled(Protocol p, const brickwork::Census& c, Rng& rng, const CostModel& m) {
  const auto draw = [&](std::int64_t n) {
    OctantCounts h{};
    for (std::int64_t i = 0; i < n; ++i) ++h[uniform_int(rng, 0, 7)];
    return h;
  };
  const std::int64_t prepared = p == Protocol::Protocol2 ? m.bsa_logical_per_qubit * c.qubits : c.qubits;
  const auto prep = p == Protocol::BfkBasic ? OctantCounts{} : draw(prepared);
  return estimate_per_octant(p, c, prep, draw(c.measured), m);
}

}  // namespace bqc::ledger
