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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bqc/ledger/estimate.hpp"

namespace bqc::ledger {

struct RatioRow {
  std::string label;
  std::vector<std::optional<Rational>> cells;  // nullopt when the baseline is zero
};

struct RatioTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<RatioRow> rows;
};

struct TableInputs {
  compiler::GateTally target;  // decomposed target circuit
  Report ft_circuit;
  Report bfk_basic;
  Report protocol1;
  Report protocol2;
};

/// Three comparisons: against the target circuit (T, 2q, 1q), against the
/// FT target circuit, and against plain BFK (all four categories).
std::vector<RatioTable> ratio_tables(const TableInputs& in);

/// "1,515x": rounded half away from zero with thousands separators; "n/a"
/// for a missing ratio.
std::string format_ratio(const std::optional<Rational>& r);

/// Every report the tables need, for a decomposed circuit and its census.
TableInputs table_inputs(const compiler::GateTally& target, const brickwork::Census& census, const CostModel& m = {});

/// Inputs for the 10-bit adder on the 35 x 612 layout.
TableInputs adder_benchmark(const CostModel& m = {});

struct CheckRow {
  std::string key;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

/// Recomputes every reference quantity of the adder benchmark and pairs it
/// with the embedded expected value.
std::vector<CheckRow> reference_check(const CostModel& m = {});

std::string to_text(const Report& r);
std::string to_csv(const Report& r);
nlohmann::json to_json(const Report& r);

std::string to_text(const RatioTable& t);
std::string to_csv(const RatioTable& t);
nlohmann::json to_json(const RatioTable& t);

std::string to_text(const std::vector<CheckRow>& rows);
nlohmann::json to_json(const std::vector<CheckRow>& rows);

}  // namespace bqc::ledger
