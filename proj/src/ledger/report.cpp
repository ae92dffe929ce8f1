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

#include "bqc/ledger/report.hpp"

#include <algorithm>
#include <sstream>

#include "bqc/compiler/passes.hpp"
#include "bqc/compiler/qcla.hpp"

namespace bqc::ledger {

namespace {

constexpr const char* kCategories[] = {"t_gates", "two_qubit", "one_qubit", "measurements"};

std::optional<Rational> ratio(const Rational& num, const Rational& den) {
  if (den == Rational(0)) return std::nullopt;
  return num / den;
}

RatioRow row(std::string label, const CostVector& c, const std::vector<Rational>& base) {
  RatioRow r{std::move(label), {}};
  const auto g = c.gates();
  for (std::size_t i = 0; i < base.size(); ++i) r.cells.push_back(ratio(g[i], base[i]));
  return r;
}

std::vector<Rational> first(const CostVector& c, std::size_t n) {
  const auto g = c.gates();
  return {g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::string pad(const std::string& s, std::size_t w, bool right) {
  if (s.size() >= w) return s;
  return right ? std::string(w - s.size(), ' ') + s : s + std::string(w - s.size(), ' ');
}

// Left column plus right-aligned columns.
std::string align(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& r : cells)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream out;
  for (const auto& r : cells) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) line += (i ? "  " : "") + pad(r[i], width[i], i > 0);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::vector<RatioTable> ratio_tables(const TableInputs& in) {
  const std::vector<Rational> target{in.target.t_count, in.target.two_qubit_clifford, in.target.one_qubit_clifford};
  const auto& ft = in.ft_circuit.party("circuit");
  const auto& bfk = in.bfk_basic.party("bob");
  const auto& p1_bob = in.protocol1.party("bob");
  const auto& p1_alice = in.protocol1.party("alice");
  const auto& bsa = in.protocol2.party("bob");

  RatioTable t1{"compared to the target circuit", {"T gates", "2-qubit gates", "1-qubit gates"}, {}};
  t1.rows = {row("FT circuit", ft, target), row("BFK basic", bfk, target),
             row("Protocol 1 (Bob)", p1_bob, target), row("Protocol 1 (Alice)", p1_alice, target),
             row("Protocol 2 BSA (Bob only)", bsa, target)};
  const std::vector<std::string> four{"T gates", "2-qubit gates", "1-qubit gates", "measurements"};
  RatioTable t2{"compared to the fault-tolerant target circuit", four, {}};
  t2.rows = {row("Protocol 1 (Bob)", p1_bob, first(ft, 4)), row("Protocol 1 (Alice)", p1_alice, first(ft, 4)),
             row("Protocol 2 BSA (Bob only)", bsa, first(ft, 4))};
  RatioTable t3{"compared to plain BFK", four, {}};
  t3.rows = {row("Protocol 1 (Bob)", p1_bob, first(bfk, 4)), row("Protocol 1 (Alice)", p1_alice, first(bfk, 4)),
             row("Protocol 2 BSA (Bob only)", bsa, first(bfk, 4))};
  return {t1, t2, t3};
}

std::string format_ratio(const std::optional<Rational>& r) {
  if (!r) return "n/a";
  return format_rational(Rational(round_half_away(*r)), true) + "x";
}

TableInputs adder_benchmark(const CostModel& m) {
  return table_inputs(compiler::tally(compiler::decompose(compiler::qcla_adder(10))), brickwork::brick_census(35, 612), m);
}

TableInputs table_inputs(const compiler::GateTally& target, const brickwork::Census& census, const CostModel& m) {
  TableInputs in;
  in.target = target;
  EstimateInput ei{census, in.target};
  in.ft_circuit = estimate(Protocol::FtCircuit, ei, m);
  in.bfk_basic = estimate(Protocol::BfkBasic, ei, m);
  in.protocol1 = estimate(Protocol::Protocol1, ei, m);
  in.protocol2 = estimate(Protocol::Protocol2, ei, m);
  return in;
}

std::vector<CheckRow> reference_check(const CostModel& m) {
  struct Expected {
    const char* key;
    const char* value;
  };
  // reference values, in the formatting format_rational produces
  static const Expected kExpected[] = {
      {"adder.toffoli", "63"}, {"adder.cnot", "35"}, {"adder.not", "18"}, {"adder.wires", "35"},
      {"decomposed.t", "441"}, {"decomposed.cnot", "413"}, {"decomposed.one_qubit", "144"},
      {"census.qubits", "85,715"}, {"census.bricks", "10,404"}, {"census.half_bricks", "612"},
      {"census.measured", "85,680"}, {"census.edges", "106,488"},
      {"brick", "84 / 1,454 / 330 / 228"}, {"half_brick", "42 / 720 / 165 / 114"},
      {"phase_shift_avg", "10.5 / 131 / 30.25 / 17.5"}, {"alice_prep_avg", "10.5 / 239 / 56.25 / 35.5"},
      {"ft_circuit", "9,261 / 118,433 / 23,058 / 15,435"},
      {"bfk_basic.bob", "42,840 / 106,488 / 149,940 / 85,680"},
      {"protocol1.alice", "900,007.5 / 20,485,885 / 4,821,468.75 / 3,042,882.5"},
      {"protocol1.bob", "899,640 / 15,568,056 / 3,534,300 / 2,441,880"},
      {"protocol2.bob_prep", "7,200,060 / 163,887,080 / 38,571,750 / 24,343,060"},
      {"protocol2.bob_compute", "899,640 / 15,568,056 / 3,534,300 / 2,441,880"},
      {"protocol2.transmitted_per_qubit", "63"},
      {"table1.FT circuit", "21x / 287x / 160x"},
      {"table1.BFK basic", "97x / 258x / 1,041x"},
      {"table1.Protocol 1 (Bob)", "2,040x / 37,695x / 24,544x"},
      {"table1.Protocol 1 (Alice)", "2,041x / 49,603x / 33,482x"},
      {"table1.Protocol 2 BSA (Bob only)", "18,367x / 434,516x / 292,403x"},
      {"table2.Protocol 1 (Bob)", "97x / 131x / 153x / 158x"},
      {"table2.Protocol 1 (Alice)", "97x / 173x / 209x / 197x"},
      {"table2.Protocol 2 BSA (Bob only)", "875x / 1,515x / 1,826x / 1,735x"},
      {"table3.Protocol 1 (Bob)", "21x / 146x / 24x / 29x"},
      {"table3.Protocol 1 (Alice)", "21x / 192x / 32x / 36x"},
      {"table3.Protocol 2 BSA (Bob only)", "189x / 1,685x / 281x / 313x"},
  };

  std::map<std::string, std::string> actual;
  const auto num = [](std::int64_t v) { return format_rational(Rational(v), true); };
  const auto vec = [](const CostVector& c) {
    std::string s;
    for (const auto& g : c.gates()) s += (s.empty() ? "" : " / ") + format_rational(g, true);
    return s;
  };
  const auto raw = compiler::tally(compiler::qcla_adder(10));
  actual["adder.toffoli"] = num(raw.toffoli);
  actual["adder.cnot"] = num(raw.cnot);
  actual["adder.not"] = num(raw.not_gates);
  actual["adder.wires"] = num(compiler::qcla_adder(10).wire_count);
  const auto in = adder_benchmark(m);
  actual["decomposed.t"] = num(in.target.t_count);
  actual["decomposed.cnot"] = num(in.target.cnot);
  actual["decomposed.one_qubit"] = num(in.target.one_qubit_clifford);
  const auto census = brickwork::brick_census(35, 612);
  actual["census.qubits"] = num(census.qubits);
  actual["census.bricks"] = num(census.bricks);
  actual["census.half_bricks"] = num(census.half_bricks);
  actual["census.measured"] = num(census.measured);
  actual["census.edges"] = num(census.edges);
  actual["brick"] = vec(brick_cost(m));
  actual["half_brick"] = vec(half_brick_cost(m));
  actual["phase_shift_avg"] = vec(phase_shift_mean(m));
  actual["alice_prep_avg"] = vec(m.alice_prep_avg);
  actual["ft_circuit"] = vec(in.ft_circuit.party("circuit"));
  actual["bfk_basic.bob"] = vec(in.bfk_basic.party("bob"));
  actual["protocol1.alice"] = vec(in.protocol1.party("alice"));
  actual["protocol1.bob"] = vec(in.protocol1.party("bob"));
  actual["protocol2.bob_prep"] = vec(in.protocol2.party("bob_prep"));
  actual["protocol2.bob_compute"] = vec(in.protocol2.party("bob_compute"));
  actual["protocol2.transmitted_per_qubit"] = num(in.protocol2.party("alice").transmitted / census.qubits);
  const auto tables = ratio_tables(in);
  for (std::size_t t = 0; t < tables.size(); ++t)
    for (const auto& r : tables[t].rows) {
      std::string s;
      for (const auto& c : r.cells) s += (s.empty() ? "" : " / ") + format_ratio(c);
      actual["table" + std::to_string(t + 1) + "." + r.label] = s;
    }

  std::vector<CheckRow> out;
  for (const auto& e : kExpected) out.push_back({e.key, e.value, actual.count(e.key) ? actual[e.key] : "missing"});
  return out;
}

std::string to_text(const Report& r) {
  std::vector<std::vector<std::string>> cells{{"party", "T", "2-qubit", "1-qubit", "measurements", "transmitted"}};
  for (const auto& p : r.parties) {
    std::vector<std::string> line{p.party};
    for (const auto& g : p.cost.gates()) line.push_back(format_rational(g, true));
    line.push_back(format_rational(Rational(p.cost.transmitted), true));
    cells.push_back(line);
  }
  std::string out = "# " + std::string(protocol_name(r.protocol)) + "\n";
  if (!r.parties.empty()) out += align(cells);
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  return out;
}

std::string to_csv(const Report& r) {
  std::string out = "protocol,party,t_gates,two_qubit,one_qubit,measurements,transmitted\n";
  for (const auto& p : r.parties) {
    out += std::string(protocol_name(r.protocol)) + "," + csv_field(p.party);
    for (const auto& g : p.cost.gates()) out += "," + format_rational(g);
    out += "," + std::to_string(p.cost.transmitted) + "\n";
  }
  return out;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["protocol"] = protocol_name(r.protocol);
  j["parties"] = nlohmann::json::array();
  for (const auto& p : r.parties) {
    nlohmann::json q{{"party", p.party}, {"transmitted", p.cost.transmitted}};
    const auto g = p.cost.gates();
    for (int i = 0; i < 4; ++i) q[kCategories[i]] = format_rational(g[i]);
    j["parties"].push_back(q);
  }
  j["notes"] = r.notes;
  return j;
}

std::string to_text(const RatioTable& t) {
  std::vector<std::vector<std::string>> cells{{""}};
  for (const auto& c : t.columns) cells[0].push_back(c);
  for (const auto& r : t.rows) {
    std::vector<std::string> line{r.label};
    for (const auto& c : r.cells) line.push_back(format_ratio(c));
    cells.push_back(line);
  }
  return "# " + t.title + "\n" + align(cells);
}

std::string to_csv(const RatioTable& t) {
  std::string out = "row";
  for (const auto& c : t.columns) out += "," + csv_field(c);
  out += "\n";
  for (const auto& r : t.rows) {
    out += csv_field(r.label);
    for (const auto& c : r.cells) out += "," + csv_field(format_ratio(c));
    out += "\n";
  }
  return out;
}

nlohmann::json to_json(const RatioTable& t) {
  nlohmann::json j{{"title", t.title}, {"columns", t.columns}, {"rows", nlohmann::json::array()}};
  for (const auto& r : t.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : r.cells)
      cells.push_back(c ? nlohmann::json{{"ratio", format_rational(*c)}, {"rounded", round_half_away(*c)}}
                        : nlohmann::json(nullptr));
    j["rows"].push_back({{"label", r.label}, {"cells", cells}});
  }
  return j;
}

std::string to_text(const std::vector<CheckRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) cells.push_back({r.ok() ? "ok" : "MISMATCH", r.key, r.actual, r.ok() ? "" : "expected " + r.expected});
  return align(cells);
}

nlohmann::json to_json(const std::vector<CheckRow>& rows) {
  auto j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"key", r.key}, {"expected", r.expected}, {"actual", r.actual}, {"ok", r.ok()}});
  return j;
}

}  // namespace bqc::ledger
