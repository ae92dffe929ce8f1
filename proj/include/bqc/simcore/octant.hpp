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
#include <numbers>
#include <ostream>

namespace bqc {

/// An angle k*pi/4 with k in 0..7. All protocol angles live here, so angle
/// arithmetic is exact integer arithmetic mod 8.
class Octant {
 public:
  constexpr Octant() = default;
  constexpr explicit Octant(int k) : k_(static_cast<std::uint8_t>(((k % 8) + 8) % 8)) {}

  constexpr int k() const noexcept { return k_; }
  double radians() const noexcept { return k_ * std::numbers::pi / 4.0; }

  constexpr Octant operator-() const noexcept { return Octant(-k_); }
  constexpr Octant operator+(Octant o) const noexcept { return Octant(k_ + o.k_); }
  constexpr Octant operator-(Octant o) const noexcept { return Octant(k_ - o.k_); }
  constexpr Octant& operator+=(Octant o) noexcept { return *this = *this + o; }
  constexpr bool operator==(const Octant&) const = default;

  static constexpr Octant pi() noexcept { return Octant(4); }

 private:
  std::uint8_t k_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Octant o) { return os << o.k() << "pi/4"; }

}  // namespace bqc
