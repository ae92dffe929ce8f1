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

#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "bqc/errors.hpp"
#include "bqc/ledger.hpp"

namespace bqc::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read `" + path + "`");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write `" + path.string() + "`");
  out << text;
  std::cout << "wrote " << path.string() << "\n";
}

std::string census_line(const brickwork::Census& c) {
  return "(" + std::to_string(c.rows) + ", " + std::to_string(c.layers) + ", " + std::to_string(c.bricks) + ", " +
         std::to_string(c.half_bricks) + ", " + std::to_string(c.qubits) + ")";
}

nlohmann::json census_json(const brickwork::Census& c) {
  return {{"rows", c.rows},   {"layers", c.layers},     {"bricks", c.bricks}, {"half_bricks", c.half_bricks},
          {"qubits", c.qubits}, {"measured", c.measured}, {"edges", c.edges}};
}

nlohmann::json tally_json(const compiler::GateTally& t) {
  return {{"t", t.t_count},           {"two_qubit_clifford", t.two_qubit_clifford},
          {"one_qubit_clifford", t.one_qubit_clifford}, {"toffoli", t.toffoli},
          {"swap", t.swap},           {"cnot", t.cnot},
          {"not", t.not_gates},       {"hadamard", t.hadamard}};
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << v;
  return s.str();
}

// Physical wire pos[w] ends up holding logical wire w.
StateVector permute(const StateVector& s, const std::vector<int>& pos) {
  const int n = s.num_qubits();
  StateVector out = s;
  out.amplitudes().setZero();
  for (Eigen::Index i = 0; i < s.dimension(); ++i) {
    Eigen::Index j = 0;
    for (int w = 0; w < n; ++w) {
      const int p = w < static_cast<int>(pos.size()) ? pos[w] : w;
      if ((i >> (n - 1 - w)) & 1) j |= Eigen::Index(1) << (n - 1 - p);
    }
    out.amplitudes()(j) = s[i];
  }
  return out;
}

StateVector make_input(const std::string& kind, int rows, std::uint64_t seed) {
  if (kind == "plus") {
    StateVector s = plus_state<double>(Octant(0));
    for (int r = 1; r < rows; ++r) s.append_state(plus_state<double>(Octant(0)));
    return s;
  }
  if (kind == "random") {
    Rng rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    StateVector::Amplitudes a(Eigen::Index(1) << rows);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = {g(rng), g(rng)};
    auto s = StateVector::from_amplitudes(std::move(a));
    s.normalize();
    return s;
  }
  if (kind.empty() || kind.size() > static_cast<std::size_t>(rows) || kind.find_first_not_of("01") != std::string::npos)
    throw ArgumentError("--input takes random, plus or up to " + std::to_string(rows) + " bits");
  std::uint64_t bits = 0;
  for (int w = 0; w < rows; ++w) bits = (bits << 1) | (w < static_cast<int>(kind.size()) && kind[w] == '1');
  StateVector::Amplitudes a = StateVector::Amplitudes::Zero(Eigen::Index(1) << rows);
  a(static_cast<Eigen::Index>(bits)) = 1.0;
  return StateVector::from_amplitudes(std::move(a));
}

// What the circuit (or, for a bare layout, its gate reading) does to input.
StateVector reference_output(const Source& src, const StateVector& input) {
  if (!src.compiled) return brickwork::apply_layout_as_circuit(src.layout, input);
  StateVector s = input;
  for (const auto& g : src.compiled->source.gates) apply_gate(s, g);
  return permute(s, src.compiled->routed.final_position);
}

std::optional<ledger::Protocol> protocol_arg(const std::string& name) {
  if (name == "bfk") return ledger::Protocol::BfkBasic;
  if (name == "p1") return ledger::Protocol::Protocol1;
  if (name == "bsa" || name == "p2") return ledger::Protocol::Protocol2;
  if (name == "ft") return ledger::Protocol::FtCircuit;
  return ledger::protocol_from_name(name);
}

brickwork::Census parse_census(const std::string& s) {
  const auto x = s.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const long long n = std::stoll(s.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(s);
    const long long m = std::stoll(s.substr(x + 1), &used);
    if (used != s.size() - x - 1) throw std::invalid_argument(s);
    return brickwork::brick_census(n, m);
  } catch (const std::logic_error&) {
    throw ArgumentError("--census expects NxM, got `" + s + "`");
  }
}

}  // namespace

std::string default_output_dir() {
  if (const char* d = std::getenv("BQC_OUTPUT_DIR"); d && *d) return d;
  return "bqc-out";
}

Source load_source(const std::string& arg, int pad_to) {
  Source src;
  if (arg.ends_with(".json")) {
    src.layout = brickwork::layout_from_json(read_file(arg));
    src.name = fs::path(arg).stem().string();
  } else {
    auto c = compiler::builtin_circuit(arg);
    if (c) {
      src.name = arg;
      for (auto& ch : src.name)
        if (ch == ':') ch = '_';
    } else {
      c = compiler::parse_circuit(read_file(arg));
      src.name = fs::path(arg).stem().string();
    }
    src.compiled = compiler::compile(*c);
    src.layout = src.compiled->placed.layout;
  }
  if (pad_to > 0) src.layout = brickwork::pad_layers(src.layout, pad_to);
  return src;
}

int cmd_compile(const CompileOptions& o) {
  const auto src = load_source(o.source, o.pad_layers);
  if (!src.compiled) throw ArgumentError("compile needs a circuit, not a layout document");
  const auto& c = *src.compiled;
  const auto source_tally = compiler::tally(c.source);
  const auto decomposed = compiler::tally(c.decomposed);
  const auto census = src.layout.census();

  std::cout << "source " << o.source << "  wires " << c.source.wire_count << "\n";
  std::cout << "tally toffoli " << source_tally.toffoli << "  cnot " << source_tally.cnot << "  not "
            << source_tally.not_gates << "  t " << source_tally.t_count << "\n";
  std::cout << "decomposed t " << decomposed.t_count << "  cnot " << decomposed.cnot << "  one_qubit "
            << decomposed.one_qubit_clifford << "\n";
  std::cout << "swaps " << c.routed.swaps << "  cnot_bricks " << c.placed.cnot_bricks << "\n";
  std::cout << "census " << census_line(census) << "\n";

  const fs::path dir = o.out_dir.empty() ? default_output_dir() : o.out_dir;
  write_file(dir / (src.name + ".layout.json"), brickwork::layout_to_json(src.layout));
  nlohmann::json t;
  t["format_version"] = kFormatVersion;
  t["source"] = o.source;
  t["wires"] = c.source.wire_count;
  t["tally"] = tally_json(source_tally);
  t["decomposed"] = tally_json(decomposed);
  t["swaps"] = c.routed.swaps;
  t["final_position"] = c.routed.final_position;
  t["cnot_bricks"] = c.placed.cnot_bricks;
  t["census"] = census_json(census);
  write_file(dir / (src.name + ".tally.json"), t.dump(2) + "\n");
  return kSuccess;
}

int cmd_run(const RunOptions& o) {
  protocol::RunConfig cfg;
  if (!o.config_path.empty()) cfg = protocol::run_config_from_json(read_file(o.config_path));
  if (!o.seed) throw ArgumentError("run needs --seed");
  cfg.seed = *o.seed;
  if (o.backend == "exact")
    cfg.backend = protocol::Backend::Exact;
  else if (o.backend == "tally")
    cfg.backend = protocol::Backend::Tally;
  else if (!o.backend.empty())
    throw ArgumentError("unknown backend `" + o.backend + "`");
  if (o.depolarizing) cfg.channel.depolarizing = *o.depolarizing;
  if (o.loss) cfg.channel.loss = *o.loss;
  if (o.max_retransmits) cfg.channel.max_retransmits = *o.max_retransmits;
  if (o.buffer_mode == "eight-qubit")
    cfg.buffer_mode = protocol::BufferMode::EightQubit;
  else if (o.buffer_mode == "measure-and-discard")
    cfg.buffer_mode = protocol::BufferMode::MeasureAndDiscard;
  else if (!o.buffer_mode.empty())
    throw ArgumentError("unknown buffer mode `" + o.buffer_mode + "`");
  cfg.keep_transcript = o.transcript;
  cfg.channel.validate();

  const auto proto = protocol_arg(o.protocol);
  if (!proto || *proto == ledger::Protocol::FtCircuit || *proto == ledger::Protocol::BfkFtComparison)
    throw ArgumentError("--protocol takes bfk, p1 or bsa");
  const auto src = load_source(o.source, o.pad_layers);
  const bool exact = cfg.backend == protocol::Backend::Exact;
  const bool bsa = *proto == ledger::Protocol::Protocol2;

  std::optional<StateVector> input;
  std::string input_kind = o.input.empty() ? (bsa ? "plus" : "random") : o.input;
  if (exact) {
    if (bsa && input_kind != "plus") throw ArgumentError("bsa starts column 1 in |+>; use --input plus");
    if (2 * src.layout.rows() > kDefaultQubitCap)
      throw ResourceLimitError("exact backend needs " + std::to_string(2 * src.layout.rows()) +
                               " live qubits, cap is " + std::to_string(kDefaultQubitCap));
    input = make_input(input_kind, src.layout.rows(), cfg.seed);
  }

  std::cout << "protocol " << o.protocol << "  backend " << protocol::backend_name(cfg.backend) << "  seed "
            << cfg.seed << "\n";
  std::cout << "census " << census_line(src.layout.census()) << "\n";
  protocol::RunResult res;
  try {
    const std::optional<StateVector> handed = bsa ? std::nullopt : input;
    switch (*proto) {
      case ledger::Protocol::BfkBasic: res = protocol::run_bfk_basic(src.layout, handed, cfg); break;
      case ledger::Protocol::Protocol1: res = protocol::run_protocol1(src.layout, handed, cfg); break;
      default: res = protocol::run_protocol2_bsa(src.layout, handed, cfg); break;
    }
  } catch (const ProtocolAbortError& e) {
    std::cout << "status protocol-abort: " << e.what() << "\n";
    return kProtocolAbort;
  }

  const fs::path dir = o.out_dir.empty() ? default_output_dir() : o.out_dir;
  const std::string stem = src.name + "." + o.protocol;
  nlohmann::json header{{"format_version", kFormatVersion}, {"protocol", o.protocol}, {"seed", cfg.seed}};
  if (o.transcript) {
    const auto bob = res.transcript.bob_jsonl();
    header["view"] = "bob";
    write_file(dir / (stem + ".bob.jsonl"), header.dump() + "\n" + bob);
    header["view"] = "omniscient";
    write_file(dir / (stem + ".omniscient.jsonl"), header.dump() + "\n" + res.transcript.omniscient_jsonl());
    std::cout << "transcript digest " << hex(fnv1a(bob)) << "\n";
  }

  const auto& r = res.resources;
  nlohmann::json led;
  led["format_version"] = kFormatVersion;
  led["protocol"] = o.protocol;
  led["backend"] = protocol::backend_name(cfg.backend);
  led["seed"] = cfg.seed;
  led["config"] = nlohmann::json::parse(protocol::run_config_to_json(cfg));
  led["census"] = census_json(r.census);
  led["expected"] = ledger::to_json(r.expected);
  led["realized"] = ledger::to_json(r.realized);
  led["transmitted"] = r.transmitted;
  led["transmitted_per_qubit"] =
      ledger::format_rational(ledger::Rational(r.transmitted, std::max<std::int64_t>(r.census.qubits, 1)));
  led["returned"] = r.returned;
  led["buffer_high_water"] = r.buffer_high_water;
  led["channel_errors"] = r.channel_errors;
  led["corrected_blocks"] = r.corrected_blocks;
  led["uncorrectable_blocks"] = r.uncorrectable_blocks;
  led["messages"] = res.messages;
  led["retransmissions"] = res.retransmissions;
  led["failed"] = res.failed;
  led["flags"] = res.flags;

  std::cout << "messages " << res.messages << "  retransmissions " << res.retransmissions << "\n";
  std::cout << "transmitted " << r.transmitted << " physical qubits ("
            << led["transmitted_per_qubit"].get<std::string>() << " per qubit)\n";
  if (bsa) std::cout << "buffer high-water " << r.buffer_high_water << " blocks\n";
  std::cout << ledger::to_text(r.expected);
  if (res.output && input) {
    const double f = fidelity(*res.output, reference_output(src, *input));
    led["fidelity"] = f;
    std::cout.precision(12);
    std::cout << "fidelity " << std::fixed << f << "\n";
    std::cout.unsetf(std::ios::floatfield);
  }
  write_file(dir / (stem + ".ledger.json"), led.dump(2) + "\n");
  for (const auto& f : res.flags) std::cout << "flag " << f << "\n";
  std::cout << "status " << (res.failed ? "uncorrectable" : "success") << "\n";
  return res.failed ? kUncorrectable : kSuccess;
}

int cmd_estimate(const EstimateOptions& o) {
  if (o.format != "text" && o.format != "csv" && o.format != "json")
    throw ArgumentError("--format takes text, csv or json");
  std::vector<ledger::Protocol> protocols;
  for (const auto& p : o.protocols.empty() ? std::vector<std::string>{"bfk", "p1", "bsa", "ft"} : o.protocols) {
    const auto q = protocol_arg(p);
    if (!q) throw ArgumentError("unknown protocol `" + p + "`");
    protocols.push_back(*q);
  }

  const auto src = load_source(o.source, o.pad_layers);
  std::vector<std::string> notes;
  brickwork::Census census;
  if (!o.census.empty()) {
    census = parse_census(o.census);
  } else {
    census = src.layout.census();
    if (src.compiled) {
      std::string note = "census from the greedy placer: n=" + std::to_string(census.rows) +
                         ", m=" + std::to_string(census.layers);
      if (o.source == "qcla:10" && census.layers != 612)
        note += "; the 612-layer benchmark layout is larger (pass --census 35x612 to use it)";
      notes.push_back(note);
    }
  }

  std::optional<compiler::GateTally> target;
  if (src.compiled) target = compiler::tally(src.compiled->decomposed);
  std::vector<ledger::Report> reports;
  for (auto p : protocols) {
    if (p == ledger::Protocol::FtCircuit && !target) {
      notes.push_back("ft_circuit skipped: a layout document carries no circuit");
      continue;
    }
    reports.push_back(ledger::estimate(p, {census, target}));
  }
  std::vector<ledger::RatioTable> tables;
  if (target) tables = ledger::ratio_tables(ledger::table_inputs(*target, census));
  std::vector<ledger::CheckRow> checks;
  if (o.reference_check) checks = ledger::reference_check();

  std::string out;
  if (o.format == "json") {
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["source"] = o.source;
    j["census"] = census_json(census);
    j["notes"] = notes;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(ledger::to_json(r));
    j["tables"] = nlohmann::json::array();
    for (const auto& t : tables) j["tables"].push_back(ledger::to_json(t));
    if (o.reference_check) j["reference_check"] = ledger::to_json(checks);
    out = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    out = "# format_version " + std::to_string(kFormatVersion) + "\n";
    for (const auto& r : reports) out += ledger::to_csv(r) + "\n";
    for (const auto& t : tables) out += ledger::to_csv(t) + "\n";
    if (o.reference_check) {
      out += "key,expected,actual,ok\n";
      for (const auto& c : checks) out += c.key + ",\"" + c.expected + "\",\"" + c.actual + "\"," + (c.ok() ? "1" : "0") + "\n";
    }
  } else {
    for (const auto& n : notes) out += "note: " + n + "\n";
    out += "census " + census_line(census) + "\n\n";
    for (const auto& r : reports) out += ledger::to_text(r) + "\n";
    for (const auto& t : tables) out += ledger::to_text(t) + "\n";
    if (o.reference_check) out += ledger::to_text(checks);
  }
  if (o.out_path.empty())
    std::cout << out;
  else
    write_file(o.out_path, out);

  int mismatches = 0;
  for (const auto& c : checks)
    if (!c.ok()) {
      std::cerr << "mismatch " << c.key << ": expected " << c.expected << ", got " << c.actual << "\n";
      ++mismatches;
    }
  if (o.reference_check)
    std::cerr << "reference-check " << (checks.size() - mismatches) << "/" << checks.size() << " cells match\n";
  return mismatches ? kReferenceMismatch : kSuccess;
}

}  // namespace bqc::cli
