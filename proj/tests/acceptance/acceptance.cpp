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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bqc/brickwork.hpp"
#include "bqc/compiler.hpp"
#include "bqc/errors.hpp"
#include "bqc/ledger.hpp"
#include "bqc/protocol.hpp"
#include "checks.hpp"

namespace {

using namespace bqc;
using ledger::Rational;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

std::string show(const ledger::CostVector& c) {
  std::string s;
  for (const auto& g : c.gates()) s += (s.empty() ? "" : " / ") + ledger::format_rational(g, true);
  return s;
}

// Expected totals are written out here rather than read from the library.
Outcome ledger_totals() {
  const auto census = brickwork::brick_census(35, 612);
  const auto target = compiler::tally(compiler::decompose(compiler::qcla_adder(10)));
  const ledger::EstimateInput in{census, target};
  const ledger::CostModel m;
  struct Row {
    std::string label;
    ledger::CostVector actual;
    ledger::CostVector expected;
  };
  const auto bfk = ledger::estimate(ledger::Protocol::BfkBasic, in);
  const auto p1 = ledger::estimate(ledger::Protocol::Protocol1, in);
  const auto p2 = ledger::estimate(ledger::Protocol::Protocol2, in);
  const auto ft = ledger::estimate(ledger::Protocol::FtCircuit, in);
  const std::vector<Row> rows{
      {"bfk bob", bfk.party("bob"), ledger::cost(42840, 106488, 149940, 85680)},
      {"p1 alice", p1.party("alice"),
       ledger::cost(Rational(1800015, 2), 20485885, Rational(19285875, 4), Rational(6085765, 2))},
      {"p1 bob", p1.party("bob"), ledger::cost(899640, 15568056, 3534300, 2441880)},
      {"bsa bob prep", p2.party("bob_prep"), ledger::cost(7200060, 163887080, 38571750, 24343060)},
      {"ft circuit", ft.party("circuit"), ledger::cost(9261, 118433, 23058, 15435)},
      {"brick", ledger::brick_cost(m), ledger::cost(84, 1454, 330, 228)},
      {"half brick", ledger::half_brick_cost(m), ledger::cost(42, 720, 165, 114)},
  };
  std::vector<std::string> bad;
  for (const auto& r : rows)
    if (!(r.actual.gates() == r.expected.gates())) bad.push_back(r.label + " = " + show(r.actual));
  if (!bad.empty()) return {false, join(bad)};
  return {true, std::to_string(rows.size()) + " totals equal as exact rationals"};
}

Outcome ratio_tables() {
  const std::map<std::string, std::vector<std::string>> expected{
      {"0/FT circuit", {"21x", "287x", "160x"}},
      {"0/BFK basic", {"97x", "258x", "1,041x"}},
      {"0/Protocol 1 (Bob)", {"2,040x", "37,695x", "24,544x"}},
      {"0/Protocol 1 (Alice)", {"2,041x", "49,603x", "33,482x"}},
      {"0/Protocol 2 BSA (Bob only)", {"18,367x", "434,516x", "292,403x"}},
      {"1/Protocol 1 (Bob)", {"97x", "131x", "153x", "158x"}},
      {"1/Protocol 1 (Alice)", {"97x", "173x", "209x", "197x"}},
      {"1/Protocol 2 BSA (Bob only)", {"875x", "1,515x", "1,826x", "1,735x"}},
      {"2/Protocol 1 (Bob)", {"21x", "146x", "24x", "29x"}},
      {"2/Protocol 1 (Alice)", {"21x", "192x", "32x", "36x"}},
      {"2/Protocol 2 BSA (Bob only)", {"189x", "1,685x", "281x", "313x"}},
  };
  const auto tables = ledger::ratio_tables(ledger::adder_benchmark());
  if (tables.size() != 3) return {false, "expected 3 tables, got " + std::to_string(tables.size())};
  std::vector<std::string> bad;
  std::set<std::string> seen;
  int cells = 0;
  for (std::size_t t = 0; t < tables.size(); ++t)
    for (const auto& row : tables[t].rows) {
      const std::string key = std::to_string(t) + "/" + row.label;
      std::vector<std::string> got;
      for (const auto& c : row.cells) got.push_back(ledger::format_ratio(c));
      const auto it = expected.find(key);
      if (it == expected.end()) {
        bad.push_back("unexpected row " + key);
        continue;
      }
      seen.insert(key);
      cells += static_cast<int>(got.size());
      if (got != it->second) bad.push_back(key);
    }
  for (const auto& [k, v] : expected)
    if (!seen.count(k)) bad.push_back("missing row " + k);
  if (!bad.empty()) return {false, "mismatched: " + join(bad)};
  return {true, std::to_string(cells) + " cells match"};
}

Outcome census() {
  const auto a = brickwork::brick_census(35, 612);
  const auto b = brickwork::brick_census(3, 14);
  const bool ok = a.bricks == 10404 && a.half_bricks == 612 && a.qubits == 85715 && b.bricks == 14 &&
                  b.half_bricks == 14 && b.qubits == 171;
  std::ostringstream d;
  d << "35x612 -> (" << a.bricks << ", " << a.half_bricks << ", " << a.qubits << "); 3x14 -> (" << b.bricks << ", "
    << b.half_bricks << ", " << b.qubits << ")";
  return {ok, d.str()};
}

Outcome compiler_counts() {
  const auto adder = compiler::qcla_adder(10);
  const auto raw = compiler::tally(adder);
  const auto c = compiler::compile(adder);
  const auto dec = compiler::tally(c.decomposed);
  const int swaps = c.routed.swaps;
  const int layers = c.placed.layout.layers();
  std::vector<std::string> bad;
  if (adder.wire_count != 35) bad.push_back("wires " + std::to_string(adder.wire_count));
  if (raw.toffoli != 63 || raw.cnot != 35 || raw.not_gates != 18) bad.push_back("source tally");
  if (dec.t_count != 441 || dec.cnot != 413 || dec.one_qubit_clifford != 144) bad.push_back("decomposed tally");
  if (swaps < 0.85 * 328 || swaps > 1.15 * 328) bad.push_back("swaps outside band");
  if (layers > 700) bad.push_back("too many layers");
  std::ostringstream d;
  d << "toffoli " << raw.toffoli << ", cnot " << raw.cnot << ", not " << raw.not_gates << "; decomposed t "
    << dec.t_count << ", cnot " << dec.cnot << ", 1q " << dec.one_qubit_clifford << "; swaps " << swaps
    << " (band 279..377), layers " << layers << " (<= 700)";
  if (!bad.empty()) d << "; failed: " << join(bad);
  return {bad.empty(), d.str()};
}

Outcome from_check(const checks::Check& c) { return {c.passed, c.name + ": " + c.detail}; }

Outcome from_checks(const std::vector<checks::Check>& cs) {
  Outcome o{true, ""};
  std::vector<std::string> parts;
  for (const auto& c : cs) {
    o.passed = o.passed && c.passed;
    parts.push_back((c.passed ? "" : "FAILED ") + c.name + " [" + c.detail + "]");
  }
  o.detail = join(parts);
  return o;
}

std::vector<checks::Check> only(const std::vector<checks::Check>& cs, std::initializer_list<const char*> prefixes) {
  std::vector<checks::Check> out;
  for (const auto& c : cs)
    for (const char* p : prefixes)
      if (c.name.rfind(p, 0) == 0) {
        out.push_back(c);
        break;
      }
  return out;
}

}  // namespace

int main() {
  std::map<int, bool> results;
  const std::vector<Criterion> criteria{
      {1, "ledger totals on the 35x612 census", 1.0, ledger_totals},
      {2, "ratio tables cell-for-cell", 1.0, ratio_tables},
      {3, "census formula", 1.0, census},
      {4, "compiler counts and router/packer bands", 1.0, compiler_counts},
      {5, "QCLA functional correctness", 30.0, [] { return from_check(checks::qcla_functional(5)); }},
      {6, "MBQC gate oracle", 60.0,
       [] { return from_checks(only(checks::brickwork_suite(6), {"brick "})); }},
      {7, "BFK equivalence on small layouts", 120.0,
       [] { return from_checks(only(checks::equivalence_suite(7), {"BFK on random"})); }},
      {8, "Steane single-error sweep and FT T gate", 600.0,
       [] { return from_checks(only(checks::steane_suite(8), {"single Pauli", "FT T gate"})); }},
      {9, "blindness statistics and Bob-view shape", 300.0,
       [] {
         return from_checks(only(checks::blindness_suite(9), {"delta uniform", "Bob view identical"}));
       }},
      {10, "full-scale statevector execution (stated non-reproducible)", 5.0,
       [&results] {
         // 35 rows need 70 live qubits on the lazy path; the encoded run is 7x more
         const brickwork::BrickworkLayout layout(35, 612);
         bool refused = false;
         try {
           protocol::RunConfig cfg;
           cfg.seed = 1;
           cfg.backend = protocol::Backend::Exact;
           protocol::run_protocol1(layout, std::nullopt, cfg);
         } catch (const ResourceLimitError&) {
           refused = true;
         }
         const bool covered = results[1] && results[2] && results[6] && results[7] && results[8];
         std::ostringstream d;
         d << "NOT REPRODUCIBLE at desk scale: " << layout.census().qubits << " logical = "
           << 7 * layout.census().qubits << " physical qubits vs a " << kDefaultQubitCap
           << "-qubit simulator cap; exact backend " << (refused ? "refuses" : "DID NOT refuse")
           << " the layout; substituted by criteria 1-2 and 6-8 (" << (covered ? "all passed" : "NOT all passed")
           << ")";
         return Outcome{refused && covered, d.str()};
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    if (took.count() > c.budget_s) {
      o.passed = false;
      o.detail += "; over the " + std::to_string(c.budget_s) + " s budget";
    }
    results[c.id] = o.passed;
    failed += !o.passed;
    std::printf("%s criterion %d: %s (%.2f s) -- %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                took.count(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
