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
#include <variant>
#include <vector>

#include "json.hpp"

#include "bqc/brickwork/layout.hpp"

namespace bqc::protocol {

using brickwork::Site;

enum class Direction { AliceToBob, BobToAlice };

/// Quantum payload moving across the channel. handle names the payload in
/// the simulated medium; it carries nothing about how it was prepared.
struct QubitTransfer {
  Site site;
  std::int64_t handle = 0;
  int physical_qubits = 1;
  int order = -1;  // position within a batch of preparations, -1 if none
};

struct AngleAnnounce {
  Site site;
  Octant delta;
};

struct ResultAnnounce {
  Site site;
  int bit = 0;
};

/// Alice sends back one block of a preparation batch under a fresh handle.
struct SelectionReturn {
  Site site;
  std::int64_t handle = 0;
  int physical_qubits = 1;
};

using Payload = std::variant<QubitTransfer, AngleAnnounce, ResultAnnounce, SelectionReturn>;

struct ProtocolMessage {
  Direction direction = Direction::AliceToBob;
  std::int64_t sequence = 0;
  Payload payload;
};

/// Alice-side values behind a message, kept only in the omniscient view.
struct SecretNote {
  std::optional<Octant> theta;
  std::optional<int> r;
  std::optional<Octant> phi;
  std::optional<Octant> phi_prime;
  std::optional<int> corrected_bit;
  std::optional<int> selected;
};

struct TranscriptEntry {
  ProtocolMessage message;
  SecretNote secret;
  bool delivered = true;
  std::int64_t channel_errors = 0;  // Paulis the channel applied to this payload
  std::string flag;                 // receiver-side trouble, e.g. an uncorrectable block
};

/// Everything that crossed the channel, in send order.
class Transcript {
 public:
  void add(TranscriptEntry e) { entries_.push_back(std::move(e)); }
  const std::vector<TranscriptEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Delivered messages only, without secret notes.
  std::vector<ProtocolMessage> bob_view() const;

  /// One JSON record per line. The Bob view has direction, sequence,
  /// variant, fields and a payload digest; the omniscient view adds an
  /// "omniscient" object per line and lists lost messages too.
  std::string bob_jsonl() const;
  std::string omniscient_jsonl() const;

 private:
  std::vector<TranscriptEntry> entries_;
};

std::string_view variant_name(const Payload& p);
nlohmann::json to_json(const ProtocolMessage& m);

/// FNV-1a over the serialized payload, as 16 hex digits.
std::string payload_digest(const Payload& p);

/// Throws ProtocolAbortError if a Bob-view record carries a key outside the
/// message schema (so no theta, r, phi or corrected bit can appear), if
/// sequence numbers do not strictly increase per direction, or if a result
/// precedes the angle for its site.
void audit_bob_view(const Transcript& t);

/// Variant names and field sizes of the Bob view in order; equal for two
/// runs exactly when Bob saw the same message structure.
std::vector<std::string> schema_signature(const Transcript& t);

}  // namespace bqc::protocol
