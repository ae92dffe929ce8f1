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

#include <chrono>
#include <iostream>

#include "bqc/errors.hpp"
#include "checks.hpp"
#include "commands.hpp"

namespace bqc::cli {

int cmd_verify(const VerifyOptions& o) {
  std::vector<std::pair<std::string, std::function<std::vector<checks::Check>(std::uint64_t)>>> chosen;
  for (const auto& s : checks::suites())
    if (o.suite == "all" || o.suite == s.first) chosen.push_back(s);
  if (chosen.empty()) throw ArgumentError("unknown suite `" + o.suite + "`");

  int failed = 0, total = 0;
  for (const auto& [name, run] : chosen) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = run(o.seed);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::cout << "# " << name << " (seed " << o.seed << ", " << took.count() << " s)\n";
    for (const auto& c : results) {
      ++total;
      failed += !c.passed;
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
      std::cout << "\n";
    }
  }
  std::cout << (total - failed) << "/" << total << " properties passed\n";
  return failed ? kFailure : kSuccess;
}

}  // namespace bqc::cli
