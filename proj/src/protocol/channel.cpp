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

#include "bqc/protocol/channel.hpp"

#include "bqc/errors.hpp"

namespace bqc::protocol {

void ChannelConfig::validate() const {
  const auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob(depolarizing)) throw ArgumentError("depolarizing probability outside [0,1]");
  if (!prob(loss)) throw ArgumentError("loss probability outside [0,1]");
  if (max_retransmits < 0) throw ArgumentError("negative retransmit bound");
}

int physical_qubits(const Payload& p) noexcept {
  if (const auto* q = std::get_if<QubitTransfer>(&p)) return q->physical_qubits;
  if (const auto* s = std::get_if<SelectionReturn>(&p)) return s->physical_qubits;
  return 0;
}

Delivery step_channel(const ChannelConfig& cfg, const ProtocolMessage& message, Rng& rng) {
  cfg.validate();
  Delivery d;
  const int n = physical_qubits(message.payload);
  if (n == 0) {
    d.delivered = !bernoulli(rng, cfg.loss);
    return d;
  }
  // same draw order as depolarize(): fire, then which Pauli
  static constexpr Pauli kChoices[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int q = 0; q < n; ++q)
    if (bernoulli(rng, cfg.depolarizing)) d.errors.push_back({q, kChoices[uniform_int(rng, 0, 2)]});
  return d;
}

void apply_channel_errors(StateVector& state, const std::vector<int>& wires, const std::vector<ChannelError>& errors) {
  for (const auto& e : errors) {
    if (e.qubit < 0 || e.qubit >= static_cast<int>(wires.size())) throw IndexError("channel error outside the transfer");
    inject_pauli(state, wires[e.qubit], e.pauli);
  }
}

}  // namespace bqc::protocol
