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

#include "bqc/ledger/cost.hpp"

#include <stdexcept>

namespace bqc::ledger {

void CostModel::check_consistency() const {
  if (phase_shift_mean(*this) != phase_shift_avg)
    throw std::logic_error("phase_shift_avg differs from the mean of the octant words");
  if (zero_prep + transversal_1q + phase_shift_avg != alice_prep_avg)
    throw std::logic_error("alice_prep_avg differs from zero_prep + H + phase shift");
}

CostVector phase_shift_cost(const CostModel& m, Octant k) {
  CostVector c;
  if (k.k() % 2 == 1) c += m.ft_t;
  if (k.k() / 2 != 0) c += m.transversal_1q;
  return c;
}

CostVector alice_prep_cost(const CostModel& m, Octant theta) {
  return m.zero_prep + m.transversal_1q + phase_shift_cost(m, theta);
}

CostVector phase_shift_mean(const CostModel& m) {
  CostVector sum;
  for (int k = 0; k < 8; ++k) sum += phase_shift_cost(m, Octant(k));
  return Rational(1, 8) * sum;
}

CostVector brick_cost(const CostModel& m) {
  return Rational(8) * m.phase_shift_avg + Rational(10) * m.transversal_2q + Rational(8) * m.transversal_1q +
         Rational(8) * m.ft_meas_z;
}

CostVector half_brick_cost(const CostModel& m) {
  return Rational(4) * m.phase_shift_avg + Rational(4) * m.transversal_2q + Rational(4) * m.transversal_1q +
         Rational(4) * m.ft_meas_z;
}

std::string format_rational(const Rational& r, bool grouping) {
  auto den = r.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1) return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  const int places = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const auto scaled = r * scale;  // integral now
  const bool negative = scaled < Rational(0);
  const auto mag = negative ? -scaled.numerator() : scaled.numerator();
  std::string whole = std::to_string(mag / scale);
  if (grouping)
    for (int i = static_cast<int>(whole.size()) - 3; i > 0; i -= 3) whole.insert(i, ",");
  std::string out = (negative ? "-" : "") + whole;
  if (places > 0) {
    std::string frac = std::to_string(mag % scale);
    out += "." + std::string(places - frac.size(), '0') + frac;
  }
  return out;
}

std::int64_t round_half_away(const Rational& r) {
  const Rational up = (r < Rational(0) ? -r : r) + Rational(1, 2);
  const std::int64_t mag = up.numerator() / up.denominator();  // floor, both positive
  return r < Rational(0) ? -mag : mag;
}

}  // namespace bqc::ledger
