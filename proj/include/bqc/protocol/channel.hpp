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
#include <vector>

#include "bqc/protocol/messages.hpp"
#include "bqc/simcore/ops.hpp"

namespace bqc::protocol {

struct ChannelConfig {
  double depolarizing = 0.0;  // per physical qubit on the quantum channel
  double loss = 0.0;          // per classical message
  int max_retransmits = 8;

  /// Throws ArgumentError for probabilities outside [0,1] or a negative
  /// retry bound.
  void validate() const;
};

/// A Pauli the channel put on one physical qubit of a transfer.
struct ChannelError {
  int qubit = 0;  // index inside the transfer, 0-based
  Pauli pauli = Pauli::X;
};

struct Delivery {
  bool delivered = true;
  std::vector<ChannelError> errors;
};

/// One pass of a message through the channel. Quantum payloads go through
/// depolarize(p) once per physical qubit (the returned errors are what the
/// caller applies to the carried state); classical messages are dropped with
/// the loss probability. Delivery is in order.
Delivery step_channel(const ChannelConfig& cfg, const ProtocolMessage& message, Rng& rng);

/// Physical qubits a message carries on the quantum channel, 0 if classical.
int physical_qubits(const Payload& p) noexcept;

/// Applies channel errors to the given wires of a state, error.qubit
/// indexing into wires.
void apply_channel_errors(StateVector& state, const std::vector<int>& wires, const std::vector<ChannelError>& errors);

}  // namespace bqc::protocol
