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

#include <iostream>

#include "CLI11.hpp"
#include "bqc/errors.hpp"
#include "commands.hpp"

using namespace bqc::cli;

int main(int argc, char** argv) {
  CLI::App app{"Blind quantum computation workbench: compile circuits to brickwork, run the protocols, "
               "estimate costs and check invariants."};
  app.set_version_flag("--version", "bqc 1.0.0 (file format " + std::to_string(kFormatVersion) + ")");
  app.require_subcommand(1);

  CompileOptions co;
  auto* compile = app.add_subcommand("compile", "Compile a circuit to a brickwork layout and gate tally");
  compile->add_option("circuit", co.source, "Circuit file, or built-in: toffoli, qcla:<bits>, identity:<wires>")
      ->required();
  compile->add_option("-o,--out-dir", co.out_dir, "Output directory (default $BQC_OUTPUT_DIR or ./bqc-out)");
  compile->add_option("--pad-layers", co.pad_layers, "Append identity layers up to this many")
      ->check(CLI::NonNegativeNumber);

  RunOptions ro;
  std::uint64_t seed = 0;
  auto* run = app.add_subcommand("run", "Run a protocol on a circuit or layout document");
  run->add_option("source", ro.source, "Circuit file, built-in name, or layout document (*.json)")->required();
  run->add_option("--protocol", ro.protocol, "bfk, p1 or bsa")
      ->check(CLI::IsMember({"bfk", "p1", "bsa", "p2"}))
      ->capture_default_str();
  run->add_option("--backend", ro.backend, "exact (statevector) or tally (counts only); default from --config, else exact")
      ->check(CLI::IsMember({"exact", "tally"}));
  auto* seed_opt = run->add_option("--seed", seed, "RNG seed (required)")->required();
  run->add_option("--config", ro.config_path, "JSON run config; flags override its fields");
  run->add_option("--depolarizing", ro.depolarizing, "Per-physical-qubit channel error probability")
      ->check(CLI::Range(0.0, 1.0));
  run->add_option("--loss", ro.loss, "Classical message loss probability")->check(CLI::Range(0.0, 1.0));
  run->add_option("--max-retransmits", ro.max_retransmits, "Retries per lost classical message before abort")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--buffer-mode", ro.buffer_mode, "bsa only: eight-qubit or measure-and-discard")
      ->check(CLI::IsMember({"eight-qubit", "measure-and-discard"}));
  run->add_option("--input", ro.input, "Exact backend input: random, plus, or a bit string (row 1 first)");
  run->add_option("--pad-layers", ro.pad_layers, "Append identity layers up to this many")
      ->check(CLI::NonNegativeNumber);
  run->add_flag("!--no-transcript", ro.transcript, "Skip writing the transcript files");
  run->add_option("-o,--out-dir", ro.out_dir, "Output directory (default $BQC_OUTPUT_DIR or ./bqc-out)");

  EstimateOptions eo;
  auto* estimate = app.add_subcommand("estimate", "Cost reports and ratio tables");
  estimate->add_option("source", eo.source, "Circuit file, built-in name, or layout document")->capture_default_str();
  estimate->add_option("--census", eo.census, "Override the layout size as NxM (rows x layers)");
  estimate->add_option("--protocol", eo.protocols, "bfk, p1, bsa, ft (repeatable; default all)")
      ->check(CLI::IsMember({"bfk", "p1", "bsa", "p2", "ft", "bfk_basic", "protocol1", "protocol2", "ft_circuit"}));
  estimate->add_option("--format", eo.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  estimate->add_flag("--reference-check,--paper-check", eo.reference_check,
                     "Compare the benchmark totals and tables against the embedded reference values; exit 5 on any mismatch");
  estimate->add_option("-o,--out", eo.out_path, "Write the report here instead of stdout");
  estimate->add_option("--pad-layers", eo.pad_layers, "Append identity layers up to this many")
      ->check(CLI::NonNegativeNumber);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite and print one line per property");
  verify->add_option("suite", vo.suite, "simcore, steane, brickwork, equivalence, blindness or all")
      ->required()
      ->check(CLI::IsMember({"simcore", "steane", "brickwork", "equivalence", "blindness", "all"}));
  verify->add_option("--seed", vo.seed, "Base seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kSuccess : kConfigError;
  }

  try {
    if (*compile) return cmd_compile(co);
    if (*run) {
      if (*seed_opt) ro.seed = seed;
      return cmd_run(ro);
    }
    if (*estimate) return cmd_estimate(eo);
    return cmd_verify(vo);
  } catch (const bqc::ProtocolAbortError& e) {
    std::cerr << "error: protocol aborted: " << e.what() << "\n";
    return kProtocolAbort;
  } catch (const bqc::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
}
