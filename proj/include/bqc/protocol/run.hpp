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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bqc/brickwork/mbqc.hpp"
#include "bqc/ledger/estimate.hpp"
#include "bqc/protocol/channel.hpp"
#include "bqc/protocol/messages.hpp"
#include "bqc/steane/operations.hpp"

namespace bqc::protocol {

/// exact keeps amplitudes (logical level for the encoded protocols); tally
/// keeps only the message structure and draws outcomes from the seed.
enum class Backend { Exact, Tally };

/// How Alice holds the eight blocks of a preparation batch.
enum class BufferMode { EightQubit, MeasureAndDiscard };

std::string_view backend_name(Backend b) noexcept;
std::string_view buffer_mode_name(BufferMode m) noexcept;

struct RunConfig {
  Backend backend = Backend::Exact;
  ChannelConfig channel;
  std::uint64_t seed = 0;
  BufferMode buffer_mode = BufferMode::EightQubit;
  bool keep_transcript = true;
  std::map<Site, int> forced_r;  // pins Alice's flip bit at chosen sites
};

/// Reads {"backend", "seed", "buffer_mode", "channel": {"depolarizing",
/// "loss", "max_retransmits"}}; missing keys keep their defaults. Throws
/// ParseError on malformed text and ArgumentError on bad values.
RunConfig run_config_from_json(const std::string& text);
std::string run_config_to_json(const RunConfig& cfg);

/// Costs of one run. census is counted from what the agents did (qubits
/// prepared, sites measured); expected averages over octants, realized uses
/// the angles actually drawn.
struct ResourceLedger {
  brickwork::Census census;
  ledger::Report expected;
  ledger::Report realized;
  std::int64_t transmitted = 0;  // physical qubits sent during preparation
  std::int64_t returned = 0;     // physical qubits of the output column sent back
  int buffer_high_water = 0;     // blocks Alice held at once (protocol 2)
  std::int64_t channel_errors = 0;
  std::int64_t corrected_blocks = 0;
  std::int64_t uncorrectable_blocks = 0;
};

struct RunResult {
  std::optional<StateVector> output;     // exact backend: final column, corrected
  brickwork::MeasurementRecord corrected;  // Alice's unflipped result bits
  Transcript transcript;
  ResourceLedger resources;
  std::int64_t messages = 0;  // delivered
  std::int64_t retransmissions = 0;
  bool failed = false;
  std::vector<std::string> flags;
};

/// Unencoded BFK. input is the joint column-1 state (row 1 most
/// significant); without it column 1 starts in |+>. Throws ResourceLimitError
/// when the exact backend would exceed the simulator cap and
/// ProtocolAbortError when a classical message runs out of retransmits.
RunResult run_bfk_basic(const brickwork::BrickworkLayout& layout, const std::optional<StateVector>& input,
                        const RunConfig& cfg);

/// Every qubit is a seven-qubit block. Blocks hit by two or more channel
/// errors are flagged and mark the run failed.
RunResult run_protocol1(const brickwork::BrickworkLayout& layout, const std::optional<StateVector>& input,
                        const RunConfig& cfg);

/// Bob prepares eight blocks per coordinate in octant order; Alice returns
/// one. Alice runs no gates, so a quantum input is an ArgumentError.
RunResult run_protocol2_bsa(const brickwork::BrickworkLayout& layout, const std::optional<StateVector>& input,
                            const RunConfig& cfg);

/// One encoded qubit through the physical pipeline: preparation of
/// (|0> + e^{i theta}|1>)_L, the channel, Bob's syndrome extraction and
/// correction, then R_z(-delta)_L, H_L and FT readout. With no forced error
/// the channel samples the configured depolarizing probability.
struct PipelineConfig {
  Octant theta;
  Octant delta;
  bool bob_prepares = false;  // protocol 2: Bob prepares, Alice corrects and returns
  double depolarizing = 0.0;
  std::optional<ChannelError> forced_error;
};

struct PipelineResult {
  int bit = 0;                 // Bob's FT readout
  double fidelity = 0.0;       // logical state after correction vs the ideal one
  steane::Syndrome syndrome;   // the receiver's (Bob's in protocol 1)
  std::vector<ChannelError> errors;
  ledger::CostVector prep;     // scheduled physical operations
  ledger::CostVector measure;
};

PipelineResult run_logical_qubit(const PipelineConfig& cfg, Rng& rng);

}  // namespace bqc::protocol
