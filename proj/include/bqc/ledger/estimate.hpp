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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bqc/brickwork/layout.hpp"
#include "bqc/compiler/circuit.hpp"
#include "bqc/ledger/cost.hpp"
#include "bqc/simcore/random.hpp"

namespace bqc::ledger {

enum class Protocol { BfkBasic, Protocol1, Protocol2, FtCircuit, BfkFtComparison };

std::string_view protocol_name(Protocol p) noexcept;
std::optional<Protocol> protocol_from_name(std::string_view name) noexcept;

struct PartyCost {
  std::string party;
  CostVector cost;
};

struct Report {
  Protocol protocol = Protocol::BfkBasic;
  std::vector<PartyCost> parties;
  std::vector<std::string> notes;

  /// Throws ArgumentError when no party has this name.
  const CostVector& party(std::string_view name) const;
};

struct EstimateInput {
  std::optional<brickwork::Census> census;  // needed by the blind protocols
  std::optional<compiler::GateTally> tally;  // needed by ft_circuit
};

/// Expected per-party totals with octants averaged out. Missing census or
/// tally for the chosen protocol is an ArgumentError.
Report estimate(Protocol p, const EstimateInput& in, const CostModel& m = {});

/// How many qubits got each octant.
using OctantCounts = std::array<std::int64_t, 8>;

/// Exact totals for given angle histograms: prep covers every prepared
/// qubit (qubits for protocol1, 8 x qubits for protocol2), measured covers
/// every measured qubit. bfk_basic uses only measured.
Report estimate_per_octant(Protocol p, const brickwork::Census& census, const OctantCounts& prep,
                           const OctantCounts& measured, const CostModel& m = {});

/// estimate_per_octant with every angle drawn uniformly from rng.
Report estimate_sampled(Protocol p, const brickwork::Census& census, Rng& rng, const CostModel& m = {});

}  // namespace bqc::ledger
