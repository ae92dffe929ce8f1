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
#include <functional>
#include <string>
#include <vector>

namespace bqc::checks {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named property suites with fixed seeds. Each returns one Check per
/// property; none throws on a failed property.
std::vector<Check> simcore_suite(std::uint64_t seed);
std::vector<Check> steane_suite(std::uint64_t seed);
std::vector<Check> brickwork_suite(std::uint64_t seed);
std::vector<Check> equivalence_suite(std::uint64_t seed);
std::vector<Check> blindness_suite(std::uint64_t seed);

/// Exhaustive adder check for small widths plus random pairs for wider ones.
Check qcla_functional(std::uint64_t seed);

/// suite name -> runner; names match `bqc verify <suite>`.
const std::vector<std::pair<std::string, std::function<std::vector<Check>(std::uint64_t)>>>& suites();

}  // namespace bqc::checks
