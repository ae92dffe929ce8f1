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
#include <string>

#include <boost/rational.hpp>

#include "bqc/simcore/octant.hpp"

namespace bqc::ledger {

// Compare against Rational(0), not 0: with C++20 rewritten operators the
// mixed int comparisons of Boost 1.74 recurse forever.
using Rational = boost::rational<std::int64_t>;

/// Gate and measurement counts in the four reporting categories, plus the
/// physical qubits that cross the quantum channel.
template <typename Scalar>
struct CostVectorT {
  Scalar t_gates{0};
  Scalar two_qubit{0};
  Scalar one_qubit{0};
  Scalar measurements{0};
  std::int64_t transmitted = 0;

  CostVectorT& operator+=(const CostVectorT& o) {
    t_gates += o.t_gates;
    two_qubit += o.two_qubit;
    one_qubit += o.one_qubit;
    measurements += o.measurements;
    transmitted += o.transmitted;
    return *this;
  }
  friend CostVectorT operator+(CostVectorT a, const CostVectorT& b) { return a += b; }
  friend CostVectorT operator-(CostVectorT a, const CostVectorT& b) {
    a.t_gates -= b.t_gates;
    a.two_qubit -= b.two_qubit;
    a.one_qubit -= b.one_qubit;
    a.measurements -= b.measurements;
    a.transmitted -= b.transmitted;
    return a;
  }
  /// Scales the gate counts; transmitted qubits scale only by integers.
  friend CostVectorT operator*(const Scalar& k, CostVectorT a) {
    a.t_gates *= k;
    a.two_qubit *= k;
    a.one_qubit *= k;
    a.measurements *= k;
    a.transmitted = 0;
    return a;
  }
  friend CostVectorT operator*(std::int64_t k, CostVectorT a) {
    const auto tx = a.transmitted * k;
    a = Scalar(k) * a;
    a.transmitted = tx;
    return a;
  }
  bool operator==(const CostVectorT&) const = default;

  std::array<Scalar, 4> gates() const { return {t_gates, two_qubit, one_qubit, measurements}; }
};

using CostVector = CostVectorT<Rational>;

inline CostVector cost(Rational t, Rational two, Rational one, Rational meas) { return {t, two, one, meas, 0}; }

/// Per-primitive costs of the single-layer Steane construction.
struct CostModel {
  CostVector ft_t = cost(21, 262, 50, 35);         // zero prep + magic prep + gadget
  CostVector zero_prep = cost(0, 108, 19, 18);     // 108 CNOT; 18 H + 1 Z; 18 meas
  CostVector ft_meas_z = cost(0, 42, 4, 11);       // destructive logical Z readout
  CostVector phase_shift_avg = cost(Rational(21, 2), 131, Rational(121, 4), Rational(35, 2));
  CostVector alice_prep_avg = cost(Rational(21, 2), 239, Rational(225, 4), Rational(71, 2));
  CostVector transversal_1q = cost(0, 0, 7, 0);
  CostVector transversal_2q = cost(0, 7, 0, 0);
  int block_size = 7;
  int alice_ancillas = 15;  // at least; FT T needs 7 + 15 = 22 qubits
  int bsa_logical_per_qubit = 8;

  /// Throws std::logic_error when the averages disagree with the exact
  /// per-octant words or alice_prep_avg is not zero_prep + H + phase.
  void check_consistency() const;
};

/// Logical phase R_z(k pi/4) as the word {I, T, S, TS, Z, TZ, S^dag, TS^dag}[k]:
/// one FT T when k is odd, one transversal Clifford when k/2 != 0.
CostVector phase_shift_cost(const CostModel& m, Octant k);

/// Encoded (|0> + e^{i theta}|1>)_L from |0>_L: zero prep, H_L, phase shift.
CostVector alice_prep_cost(const CostModel& m, Octant theta);

/// Average of phase_shift_cost over the eight octants, computed exactly.
CostVector phase_shift_mean(const CostModel& m);

/// Bob's work per brick: 8 phase shifts, 10 FT CZ, 8 H_L, 8 FT Z readouts.
CostVector brick_cost(const CostModel& m);
/// Per half-brick: 4 phase shifts, 4 FT CZ, 4 H_L, 4 FT Z readouts.
CostVector half_brick_cost(const CostModel& m);

/// Decimal text when the denominator has only factors 2 and 5, else p/q.
/// With grouping, thousands are separated by commas.
std::string format_rational(const Rational& r, bool grouping = false);

/// Rounds half away from zero.
std::int64_t round_half_away(const Rational& r);

}  // namespace bqc::ledger
