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

#include <random>

#include "bqc/simcore.hpp"

namespace bqc::testing {

/// Gaussian-sampled normalized state (Haar-distributed up to phase).
inline StateVector random_state(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  StateVector::Amplitudes a(Eigen::Index(1) << n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = {g(rng), g(rng)};
  auto s = StateVector::from_amplitudes(std::move(a));
  s.normalize();
  return s;
}

/// Computational basis state |bits> with wire 0 as the most significant bit.
inline StateVector basis_state(int n, std::uint64_t bits) {
  StateVector::Amplitudes a = StateVector::Amplitudes::Zero(Eigen::Index(1) << n);
  a(static_cast<Eigen::Index>(bits)) = 1.0;
  return StateVector::from_amplitudes(std::move(a));
}

}  // namespace bqc::testing
