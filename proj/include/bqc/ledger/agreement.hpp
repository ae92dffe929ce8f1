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

#include <string>
#include <vector>

#include "bqc/ledger/cost.hpp"
#include "bqc/simcore/random.hpp"

namespace bqc::ledger {

/// One primitive's model constant next to the scheduled tally of running it
/// on the Steane executor.
struct AgreementRow {
  std::string operation;
  CostVector model;
  CostVector simulated;

  bool matches() const { return model == simulated; }
  /// Per-category differences (simulated minus model), empty on a match.
  std::string discrepancy() const;
};

/// Runs zero prep, destructive Z readout, transversal H and CNOT, and the
/// full FT T gadget (22 qubits, a few seconds) when with_t is set.
std::vector<AgreementRow> simulate_primitives(const CostModel& m, Rng& rng, bool with_t = true);

}  // namespace bqc::ledger
