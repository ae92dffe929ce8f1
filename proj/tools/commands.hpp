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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bqc/compiler.hpp"
#include "bqc/protocol.hpp"

namespace bqc::cli {

inline constexpr int kFormatVersion = 1;

enum Exit : int {
  kSuccess = 0,
  kFailure = 1,  // verify found a failing property
  kConfigError = 2,
  kProtocolAbort = 3,
  kUncorrectable = 4,
  kReferenceMismatch = 5,
};

/// A circuit (built-in name or circuit file) compiled to a layout, or a
/// layout document read directly.
struct Source {
  std::string name;
  std::optional<compiler::Compilation> compiled;
  brickwork::BrickworkLayout layout{2, 1};
};

/// Files ending in .json are layout documents; anything else is a built-in
/// name or a circuit file. pad_to > 0 appends identity layers.
Source load_source(const std::string& arg, int pad_to = 0);

/// $BQC_OUTPUT_DIR when set, else ./bqc-out.
std::string default_output_dir();

struct CompileOptions {
  std::string source;
  std::string out_dir;
  int pad_layers = 0;
};
int cmd_compile(const CompileOptions& o);

struct RunOptions {
  std::string source;
  std::string protocol = "bfk";
  std::string backend;  // empty: config file, else exact
  std::optional<std::uint64_t> seed;
  std::string config_path;
  std::optional<double> depolarizing;
  std::optional<double> loss;
  std::optional<int> max_retransmits;
  std::string buffer_mode;
  std::string input;  // random, plus or a bit string; empty picks per protocol
  std::string out_dir;
  int pad_layers = 0;
  bool transcript = true;
};
int cmd_run(const RunOptions& o);

struct EstimateOptions {
  std::string source = "qcla:10";
  std::string census;  // NxM
  std::vector<std::string> protocols;
  std::string format = "text";
  bool reference_check = false;
  std::string out_path;
  int pad_layers = 0;
};
int cmd_estimate(const EstimateOptions& o);

struct VerifyOptions {
  std::string suite;
  std::uint64_t seed = 1;
};
int cmd_verify(const VerifyOptions& o);

}  // namespace bqc::cli
