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

#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "bqc/simcore.hpp"
#include "test_util.hpp"

namespace bqc {
namespace {

using C = std::complex<double>;
const double kR = 1.0 / std::sqrt(2.0);

TEST(NewState, ZeroStateLayout) {
  auto s1 = new_state(1);
  EXPECT_EQ(s1[0], C(1));
  EXPECT_EQ(s1[1], C(0));
  auto s2 = new_state(2);
  ASSERT_EQ(s2.dimension(), 4);
  EXPECT_EQ(s2[0], C(1));
  for (int i = 1; i < 4; ++i) EXPECT_EQ(s2[i], C(0));
}

TEST(NewState, CapIsEnforced) {
  EXPECT_THROW(new_state(25), ResourceLimitError);
  EXPECT_THROW(new_state(0), ArgumentError);
  EXPECT_THROW(new_state(5, 4), ResourceLimitError);
}

TEST(ApplyGate, HadamardOnZero) {
  auto s = new_state(1);
  apply_gate(s, Gate::one(GateKind::H, 0));
  EXPECT_NEAR(std::abs(s[0] - kR), 0, 1e-15);
  EXPECT_NEAR(std::abs(s[1] - kR), 0, 1e-15);
}

TEST(ApplyGate, CnotOnTenGivesEleven) {
  auto s = testing::basis_state(2, 0b10);
  apply_gate(s, Gate::two(GateKind::CNOT, 0, 1));
  EXPECT_NEAR(std::abs(s[0b11]), 1.0, 1e-15);
}

TEST(ApplyGate, RzQuarterTurnIsS) {
  auto s = plus_state(Octant(0));
  apply_gate(s, Gate::rz(Octant(2), 0));
  auto expect = qubit_state(C(kR), C(0, kR));
  EXPECT_NEAR(fidelity(s, expect), 1.0, 1e-14);
}

TEST(ApplyGate, RejectsBadOperands) {
  auto s = new_state(2);
  EXPECT_THROW(apply_gate(s, Gate::one(GateKind::H, 2)), IndexError);
  EXPECT_THROW(apply_gate(s, Gate::two(GateKind::CNOT, 1, 1)), ArgumentError);
  EXPECT_THROW(apply_gate(s, Gate{GateKind::CNOT, {0, -1, -1}, {}}), ArgumentError);
}

TEST(ApplyGate, ToffoliTruthTable) {
  for (std::uint64_t b = 0; b < 8; ++b) {
    auto s = testing::basis_state(3, b);
    apply_gate(s, Gate::toffoli(0, 1, 2));
    const std::uint64_t expect = (b & 0b110) == 0b110 ? b ^ 1 : b;
    EXPECT_NEAR(std::abs(s[static_cast<Eigen::Index>(expect)]), 1.0, 1e-15) << b;
  }
}

TEST(MeasureZ, ZeroAlwaysReadsZero) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    auto s = new_state(1);
    EXPECT_EQ(measure_z(s, 0, rng), 0);
  }
}

TEST(MeasureZ, PlusIsFair) {
  Rng rng(7);
  int ones = 0;
  for (int i = 0; i < 10000; ++i) {
    auto s = plus_state(Octant(0));
    ones += measure_z(s, 0, rng);
  }
  EXPECT_GE(ones, 4800);
  EXPECT_LE(ones, 5200);
}

TEST(MeasureZ, BellPairCorrelates) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto s = new_state(2);
    apply_gate(s, Gate::one(GateKind::H, 0));
    apply_gate(s, Gate::two(GateKind::CNOT, 0, 1));
    const int a = measure_z(s, 0, rng);
    const int b = measure_z(s, 1, rng);
    EXPECT_EQ(a, b);
  }
}

TEST(MeasureAngle, EigenstatesAreDeterministic) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto plus = plus_state(Octant(1));
    EXPECT_EQ(measure_in_angle_basis(plus, 0, Octant(1), rng), 0);
    auto minus = plus_state(Octant(5));  // |0> - e^{i pi/4}|1>
    EXPECT_EQ(measure_in_angle_basis(minus, 0, Octant(1), rng), 1);
  }
}

TEST(MeasureAngle, ZeroIsFairInEveryEquatorialBasis) {
  Rng rng(11);
  for (int k = 0; k < 8; ++k) {
    int ones = 0;
    for (int i = 0; i < 10000; ++i) {
      auto s = new_state(1);
      ones += measure_in_angle_basis(s, 0, Octant(k), rng);
    }
    EXPECT_GE(ones, 4800) << k;
    EXPECT_LE(ones, 5200) << k;
  }
}

TEST(MeasureAngle, MatchesRotateThenMeasure) {
  Rng gen(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto base = testing::random_state(3, gen);
    const Octant delta(trial % 8);
    auto a = base;
    auto b = base;
    Rng ra(100 + trial), rb(100 + trial);
    const int ba = measure_in_angle_basis(a, 1, delta, ra);
    apply_gate(b, Gate::rz(-delta, 1));
    apply_gate(b, Gate::one(GateKind::H, 1));
    const int bb = measure_z(b, 1, rb);
    EXPECT_EQ(ba, bb);
    EXPECT_GT(fidelity(a, b), 1 - 1e-12);
  }
}

TEST(BornRule, GeneralPhaseFormula) {
  // P(outcome 0 in M(delta)) = |alpha + e^{-i delta} beta|^2 / 2.
  Rng gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = testing::random_state(1, gen);
    const Octant delta(trial % 8);
    const C alpha = s[0], beta = s[1];
    const double expect0 = std::norm(alpha + std::conj(octant_phase<double>(delta)) * beta) / 2;
    auto t = s;
    apply_gate(t, Gate::rz(-delta, 0));
    apply_gate(t, Gate::one(GateKind::H, 0));
    EXPECT_NEAR(1 - probability_one(t, 0), expect0, 1e-12);
  }
}

TEST(BornRule, RealAmplitudesMatchXBasisFormula) {
  Rng gen(29);
  std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 50; ++trial) {
    const double t = u(gen);
    const double alpha = std::cos(t), beta = std::sin(t);
    auto s = qubit_state(C(alpha), C(beta));
    apply_gate(s, Gate::one(GateKind::H, 0));
    EXPECT_NEAR(1 - probability_one(s, 0), (alpha + beta) * (alpha + beta) / 2, 1e-9);
    EXPECT_NEAR(probability_one(s, 0), (alpha - beta) * (alpha - beta) / 2, 1e-9);
  }
}

TEST(InjectPauli, Basics) {
  auto s = new_state(1);
  inject_pauli(s, 0, Pauli::X);
  EXPECT_NEAR(std::abs(s[1]), 1.0, 1e-15);
  auto z = new_state(1);
  inject_pauli(z, 0, Pauli::Z);
  EXPECT_EQ(z[0], C(1));
  auto plus = plus_state(Octant(0));
  auto y = plus;
  inject_pauli(y, 0, Pauli::Y);
  EXPECT_NEAR(fidelity(plus, y), 0.0, 1e-15);
  // Y = iXZ elementwise.
  auto xz = plus;
  inject_pauli(xz, 0, Pauli::Z);
  inject_pauli(xz, 0, Pauli::X);
  EXPECT_NEAR(std::abs(y[0] - C(0, 1) * xz[0]), 0, 1e-15);
  EXPECT_NEAR(std::abs(y[1] - C(0, 1) * xz[1]), 0, 1e-15);
}

TEST(Depolarize, ZeroProbabilityIsIdentity) {
  Rng rng(1), gen(2);
  auto s = testing::random_state(2, gen);
  auto t = s;
  for (int i = 0; i < 100; ++i) EXPECT_FALSE(depolarize(t, 1, 0.0, rng).has_value());
  EXPECT_EQ(s.amplitudes(), t.amplitudes());
}

TEST(Depolarize, FullProbabilityFlipsTwoThirds) {
  Rng rng(31);
  int ones = 0;
  for (int i = 0; i < 3000; ++i) {
    auto s = new_state(1);
    ASSERT_TRUE(depolarize(s, 0, 1.0, rng).has_value());
    ones += measure_z(s, 0, rng);
  }
  // Binomial(3000, 2/3): mean 2000, sd ~25.8; 4-sigma band.
  EXPECT_GE(ones, 1897);
  EXPECT_LE(ones, 2103);
}

TEST(Depolarize, InjectionRate) {
  Rng rng(37);
  int hits = 0;
  auto s = new_state(1);
  for (int i = 0; i < 10000; ++i) hits += depolarize(s, 0, 0.1, rng).has_value();
  EXPECT_GE(hits, 850);
  EXPECT_LE(hits, 1150);
}

TEST(Depolarize, RejectsBadProbability) {
  Rng rng(1);
  auto s = new_state(1);
  EXPECT_THROW(depolarize(s, 0, 1.5, rng), ArgumentError);
  EXPECT_THROW(depolarize(s, 0, -0.1, rng), ArgumentError);
}

TEST(Fidelity, Examples) {
  auto zero = new_state(1);
  auto one = testing::basis_state(1, 1);
  EXPECT_DOUBLE_EQ(fidelity(zero, zero), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(zero, one), 0.0);
  EXPECT_NEAR(fidelity(zero, plus_state(Octant(0))), 0.5, 1e-15);
  EXPECT_THROW(fidelity(zero, new_state(2)), ArgumentError);
}

TEST(Fidelity, IsSymmetric) {
  Rng gen(41);
  for (int i = 0; i < 20; ++i) {
    auto a = testing::random_state(3, gen), b = testing::random_state(3, gen);
    EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-15);
  }
}

std::vector<Gate> all_small_gates() {
  std::vector<Gate> gates;
  for (GateKind k : {GateKind::I, GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg, GateKind::T,
                     GateKind::Tdg})
    gates.push_back(Gate::one(k, 1));
  for (int a = 0; a < 8; ++a) gates.push_back(Gate::rz(Octant(a), 0));
  for (GateKind k : {GateKind::CNOT, GateKind::CZ, GateKind::CPhase, GateKind::SWAP}) {
    gates.push_back(Gate::two(k, 0, 2));
    gates.push_back(Gate::two(k, 2, 1));
  }
  return gates;
}

TEST(Invariants, NormPreservedPerGate) {
  Rng gen(43);
  auto s = testing::random_state(4, gen);
  for (int rep = 0; rep < 5; ++rep)
    for (const Gate& g : all_small_gates()) {
      const double before = s.norm_squared();
      apply_gate(s, g);
      EXPECT_LT(std::abs(s.norm_squared() - before), 1e-12);
    }
  apply_gate(s, Gate::toffoli(3, 0, 1));
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
}

TEST(Invariants, GateThenInverseIsIdentity) {
  Rng gen(47);
  for (const Gate& g : all_small_gates()) {
    for (int trial = 0; trial < 100; ++trial) {
      auto s = testing::random_state(3, gen);
      auto t = s;
      apply_gate(t, g);
      if (g.kind == GateKind::CPhase) {
        // CS^3 = CS^dagger.
        for (int i = 0; i < 3; ++i) apply_gate(t, g);
      } else {
        apply_gate(t, inverse(g));
      }
      ASSERT_GT(fidelity(s, t), 1 - 1e-12) << gate_name(g.kind);
    }
  }
}

TEST(StateVector, AppendAndRemoveWire) {
  Rng gen(53), rng(1);
  auto s = testing::random_state(2, gen);
  auto t = s;
  t.append_qubit(C(0), C(1));
  EXPECT_EQ(t.num_qubits(), 3);
  EXPECT_NEAR(t.remove_wire(2, 1), 1.0, 1e-12);
  EXPECT_GT(fidelity(s, t), 1 - 1e-14);
  auto u = s;
  u.append_state(testing::basis_state(1, 0));
  const int bits[] = {0, 0, 0};
  const int keep[] = {0, 1};
  EXPECT_GT(fidelity(u.slice(keep, bits), s), 1 - 1e-14);
}

TEST(StateVector, DebugDumpSortedAndFiltered) {
  auto s = new_state(2);
  apply_gate(s, Gate::one(GateKind::H, 1));
  const auto dump = debug_dump(s);
  ASSERT_EQ(dump.size(), 2u);
  EXPECT_EQ(dump[0].index, 0u);
  EXPECT_EQ(dump[1].index, 1u);
  EXPECT_NEAR(dump[1].re, kR, 1e-15);
}

TEST(Octant, ClosedModEight) {
  EXPECT_EQ((Octant(7) + Octant(3)).k(), 2);
  EXPECT_EQ((-Octant(1)).k(), 7);
  EXPECT_EQ(Octant(-9).k(), 7);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) EXPECT_EQ((Octant(a) - Octant(b) + Octant(b)).k(), a);
}

}  // namespace
}  // namespace bqc
