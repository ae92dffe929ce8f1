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
#include <cstdint>
#include <vector>

#include "bqc/protocol/run.hpp"

namespace bqc::protocol {

/// One announced angle next to the true angle at its site.
struct AngleSample {
  Site site;
  Octant phi;
  Octant delta;
};

/// AngleAnnounce records of the omniscient view.
std::vector<AngleSample> angle_samples(const Transcript& t);

/// Runs BFK on the tally backend `runs` times, seeds seed, seed+1, ...,
/// with the layout's angles fixed and fresh secrets each time.
std::vector<AngleSample> collect_angle_samples(const brickwork::BrickworkLayout& layout, int runs,
                                               std::uint64_t seed);

struct CoordinateStats {
  Site site;
  std::int64_t samples = 0;
  std::array<std::int64_t, 8> counts{};
  double chi_square = 0.0;  // against uniform, 7 degrees of freedom
  double p_value = 1.0;

  double frequency(int octant) const { return samples ? double(counts[octant]) / double(samples) : 0.0; }
};

struct BlindnessReport {
  std::vector<CoordinateStats> coordinates;
  std::int64_t samples = 0;
  double mutual_information = 0.0;  // plug-in estimate between phi and delta, bits
  double mi_bias = 0.0;             // expected plug-in value under independence
  double independence_p_value = 1.0;  // G-test on the pooled phi x delta counts
  double threshold = 0.01;          // per-coordinate p-value bound actually applied
  bool passed = false;
};

/// Chi-square uniformity test of delta per coordinate and a pooled mutual
/// information estimate between phi and delta. With k coordinates each test
/// runs at significance / k; the pooled independence test runs at
/// significance. Throws ArgumentError when a coordinate has
/// fewer than min_per_coordinate samples.
BlindnessReport blindness_audit(const std::vector<AngleSample>& samples, double significance = 0.01,
                                std::int64_t min_per_coordinate = 1000);

}  // namespace bqc::protocol
