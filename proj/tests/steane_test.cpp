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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>

#include "bqc/steane.hpp"
#include "test_util.hpp"

namespace bqc::steane {
namespace {

using C = std::complex<double>;

const CodeBlock kA = CodeBlock::contiguous(0);
const CodeBlock kB = CodeBlock::contiguous(7);

std::vector<int> wires_from(int first, int count) {
  std::vector<int> w(count);
  std::iota(w.begin(), w.end(), first);
  return w;
}

// One block plus ancillas: 15 wires. Two blocks plus ancillas: 22 wires.
const std::vector<int> kAnc1 = wires_from(7, 8);
const std::vector<int> kAnc2 = wires_from(14, 8);

StateVector logical_qubit(C a0, C a1) { return qubit_state<double>(a0, a1); }

StateVector magic_logical() { return plus_state<double>(Octant(1)); }

StateVector encoded(const StateVector& logical, int total = 15) {
  const std::array<CodeBlock, 1> blocks{kA};
  return encode_logical(logical, blocks, total);
}

double logical_fidelity(const StateVector& s, const CodeBlock& b, const StateVector& expected) {
  const std::array<CodeBlock, 1> blocks{b};
  return fidelity(expected, decode_to_logical(s, blocks));
}

TEST(SteaneCode, StabilizersHaveWeightFourAndCommute) {
  for (auto k : all_stabilizers()) EXPECT_EQ(stabilizer_word(k).support().size(), 4u);
  EXPECT_EQ(stabilizer_word(Stabilizer::K1).str(), "IIIXXXX");
  EXPECT_EQ(stabilizer_word(Stabilizer::K4).str(), "IIIZZZZ");
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) {
      const auto a = stabilizer_word(all_stabilizers()[i]).support();
      const auto b = stabilizer_word(all_stabilizers()[j]).support();
      int overlap = 0;
      for (int p : a) overlap += std::count(b.begin(), b.end(), p);
      EXPECT_EQ(overlap % 2, 0);
    }
  }
}

TEST(SteaneCode, SyndromeTableIsABijection) {
  std::set<std::array<int, 3>> seen;
  for (int p = 0; p < 7; ++p) {
    const auto s = syndrome_of_position(p);
    EXPECT_TRUE(seen.insert(s).second);
    EXPECT_EQ(syndrome_position(s), p);
    // binary index: 4*b1 + b2 + 2*b3 names the 1-based position
    EXPECT_EQ(4 * s[0] + s[1] + 2 * s[2], p + 1);
  }
  EXPECT_FALSE(syndrome_position({0, 0, 0}).has_value());
}

TEST(SteaneCode, CodewordsSplitByParity) {
  for (int l = 0; l < 2; ++l) {
    ASSERT_EQ(codewords(l).size(), 8u);
    for (auto w : codewords(l)) {
      EXPECT_EQ(std::popcount(unsigned(w)) % 2, l);
      EXPECT_EQ(decode_readout(w), l);
      for (int p = 0; p < 7; ++p) EXPECT_EQ(decode_readout(w ^ (1 << p)), l);
    }
  }
}

TEST(SteaneCode, StabilizerWordsFixCodewords) {
  Rng rng(3);
  auto logical = testing::random_state(1, rng);
  const auto s = encoded(logical, 7);
  for (auto k : all_stabilizers()) {
    auto t = s;
    const auto& w = stabilizer_word(k);
    for (int p : w.support()) inject_pauli(t, kA.wires[p], w.letters[p]);
    EXPECT_GT(fidelity(s, t), 1 - 1e-12) << w.name;
  }
}

TEST(SteaneCat, NoiselessCatIsGhz) {
  StateVector s(8);
  Rng rng(1);
  Executor ex(s, rng);
  const auto cat = wires_from(0, 7);
  EXPECT_EQ(prepare_cat(ex, cat, 7), 0);
  StateVector::Amplitudes ghz = StateVector::Amplitudes::Zero(256);
  ghz(0) = ghz(0xFE) = 1 / std::sqrt(2.0);
  EXPECT_GT(fidelity(s, StateVector::from_amplitudes(ghz)), 1 - 1e-10);
  for (const auto& e : debug_dump(s)) EXPECT_TRUE(e.index == 0 || e.index == 0xFE);
}

TEST(SteaneCat, XBeforeVerificationIsCaughtAtEndsOrDownstream) {
  // X on cat wire j before the verifier CNOTs: the ends flip the parity
  // check; interior wires slip through and leave a single data error that
  // the syndrome then locates.
  for (int j = 0; j < 7; ++j) {
    auto s = encoded(logical_qubit(1, 0));
    Rng rng(10 + j);
    Executor ex(s, rng);
    ex.enable_trace();
    // op 0 is H, ops 1..6 the chain, op 7 the first verifier CNOT
    ex.schedule_fault({7, kAnc1[j], Pauli::X});
    const int v = prepare_cat(ex, std::span(kAnc1).first(7), kAnc1[7]);
    EXPECT_EQ(v, (j == 0 || j == 6) ? 1 : 0) << j;
    if (v == 1) continue;
    for (int i = 0; i < 7; ++i) ex.gate(Gate::two(GateKind::CZ, kAnc1[i], kA.wires[i]));
    for (int i = 5; i >= 0; --i) ex.gate(Gate::two(GateKind::CNOT, kAnc1[i], kAnc1[i + 1]));
    ex.gate(Gate::one(GateKind::H, kAnc1[0]));
    ex.measure(kAnc1[0]);
    for (int w : kAnc1) ex.reset(w);
    const auto syn = extract_and_correct(ex, kA, kAnc1);
    EXPECT_EQ(syn.z_fix_position, j);
    EXPECT_GT(logical_fidelity(s, kA, logical_qubit(1, 0)), 1 - 1e-9);
  }
}

TEST(SteaneZeroPrep, ProducesLogicalZeroWithModelTally) {
  for (int seed = 0; seed < 4; ++seed) {
    StateVector s(15);
    Rng rng(seed);
    Executor ex(s, rng);
    const auto rec = prepare_logical_zero(ex, kA, kAnc1);
    const auto& t = ex.scheduled();
    EXPECT_TRUE(t.same_totals(0, 108, 19, 18));
    EXPECT_EQ(t.count(GateKind::CNOT), 108);
    EXPECT_EQ(t.count(GateKind::H), 18);
    EXPECT_EQ(t.count(GateKind::Z), 1);
    EXPECT_LE(ex.executed().count(GateKind::Z), 1);
    EXPECT_EQ(ex.executed().count(GateKind::Z), rec.corrected_position >= 0 ? 1 : 0);
    EXPECT_GT(logical_fidelity(s, kA, logical_qubit(1, 0)), 1 - 1e-9);
    EXPECT_EQ(ft_measure_operator(ex, kA, LogicalOperator::ZL, kAnc1).bit, 0);
    EXPECT_TRUE(extract_and_correct(ex, kA, kAnc1).trivial());
  }
}

TEST(SteaneZeroPrep, TooFewAncillasIsAResourceError) {
  StateVector s(14);
  Rng rng(0);
  Executor ex(s, rng);
  EXPECT_THROW(prepare_logical_zero(ex, kA, wires_from(7, 7)), ResourceLimitError);
}

TEST(SteaneMeasure, LogicalZOnZeroAndOne) {
  Rng rng(4);
  auto s0 = encoded(logical_qubit(1, 0));
  Executor e0(s0, rng);
  EXPECT_EQ(ft_measure_operator(e0, kA, LogicalOperator::ZL, kAnc1).bit, 0);
  auto s1 = encoded(logical_qubit(1, 0));
  Executor e1(s1, rng);
  transversal_gate(e1, GateKind::X, kA);
  const auto m = ft_measure_operator(e1, kA, LogicalOperator::ZL, kAnc1);
  EXPECT_EQ(m.bit, 1);
  EXPECT_TRUE(m.unanimous());
}

TEST(SteaneMeasure, K5FlipsFollowTheSupport) {
  const auto support = stabilizer_word(Stabilizer::K5).support();
  for (int p = 0; p < 7; ++p) {
    auto s = encoded(logical_qubit(1, 0));
    inject_pauli(s, kA.wires[p], Pauli::X);
    Rng rng(p);
    Executor ex(s, rng);
    const int bit = ft_measure_operator(ex, kA, LogicalOperator::K5, kAnc1).bit;
    const bool in_support = std::find(support.begin(), support.end(), p) != support.end();
    EXPECT_EQ(bit, in_support ? 1 : 0) << p;
    EXPECT_EQ(bit, syndrome_of_position(p)[1]);
  }
}

TEST(SteaneMeasure, MajorityOutvotesOneCorruptedRepetition) {
  // Z on the first cat wire just before its decoding H flips that
  // repetition's bit; every repetition and operator is tried.
  const std::array<LogicalOperator, 4> ops{LogicalOperator::K1, LogicalOperator::K4, LogicalOperator::ZL,
                                           LogicalOperator::XL};
  for (auto op : ops) {
    for (int logical = 0; logical < 2; ++logical) {
      // eigenstates of the measured operator, so the clean bit is fixed
      const bool x_basis = op == LogicalOperator::XL;
      auto base = encoded(x_basis ? logical_qubit(1, logical ? -1 : 1) : logical_qubit(1 - logical, logical));
      auto clean_state = base;
      Rng r0(9);
      Executor clean(clean_state, r0);
      clean.enable_trace();
      const auto ref = ft_measure_operator(clean, kA, op, kAnc1);
      std::vector<std::int64_t> decode_h;
      for (const auto& e : clean.trace())
        if (!e.measurement && e.gate.kind == GateKind::H && e.op > 0 &&
            clean.trace()[e.op + 1].measurement && e.gate.wires[0] == kAnc1[0])
          decode_h.push_back(e.op);
      ASSERT_EQ(decode_h.size(), 3u);
      for (int rep = 0; rep < 3; ++rep) {
        auto s = base;
        Rng r(9);
        Executor ex(s, r);
        ex.schedule_fault({decode_h[rep], kAnc1[0], Pauli::Z});
        const auto m = ft_measure_operator(ex, kA, op, kAnc1);
        EXPECT_EQ(m.bit, ref.bit);
        EXPECT_NE(m.votes[rep], ref.votes[rep]);
        EXPECT_FALSE(m.unanimous());
      }
    }
  }
}

TEST(SteaneTransversal, XThenMeasureGivesOne) {
  StateVector s(15);
  Rng rng(2);
  Executor ex(s, rng);
  prepare_logical_zero(ex, kA, kAnc1);
  transversal_gate(ex, GateKind::X, kA);
  EXPECT_EQ(ft_measure_operator(ex, kA, LogicalOperator::ZL, kAnc1).bit, 1);
}

TEST(SteaneTransversal, CnotTruthTable) {
  const std::array<CodeBlock, 2> blocks{kA, kB};
  auto s = encode_logical(testing::basis_state(2, 0b10), blocks, 22);
  Rng rng(5);
  Executor ex(s, rng);
  transversal_gate(ex, GateKind::CNOT, kA, kB);
  EXPECT_EQ(ft_measure_operator(ex, kA, LogicalOperator::ZL, kAnc2).bit, 1);
  EXPECT_EQ(ft_measure_operator(ex, kB, LogicalOperator::ZL, kAnc2).bit, 1);
  EXPECT_THROW(transversal_gate(ex, GateKind::CNOT, kA, kA), ArgumentError);
}

TEST(SteaneTransversal, PhysicalSdgRealizesLogicalS) {
  const double r = 1 / std::sqrt(2.0);
  auto s = encoded(logical_qubit(r, r));
  Rng rng(6);
  Executor ex(s, rng);
  transversal_gate(ex, GateKind::S, kA);
  EXPECT_EQ(ex.executed().count(GateKind::Sdg), 7);
  EXPECT_GT(logical_fidelity(s, kA, logical_qubit(r, C(0, r))), 1 - 1e-12);
  // and the bare physical S on every wire is the logical inverse
  auto t = encoded(logical_qubit(r, r));
  for (int w : kA.wires) apply_gate(t, Gate::one(GateKind::S, w));
  EXPECT_GT(logical_fidelity(t, kA, logical_qubit(r, C(0, -r))), 1 - 1e-12);
}

TEST(SteaneTransversal, CommutesWithDecodeOnRandomStates) {
  Rng rng(77);
  const std::array<CodeBlock, 1> one{kA};
  const std::array<CodeBlock, 2> two{kA, kB};
  const GateKind kinds1[] = {GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg};
  for (int trial = 0; trial < 50; ++trial) {
    for (auto k : kinds1) {
      auto logical = testing::random_state(1, rng);
      auto s = encode_logical(logical, one, 7);
      Executor ex(s, rng);
      transversal_gate(ex, k, kA);
      apply_gate(logical, Gate::one(k, 0));
      EXPECT_GT(fidelity(logical, decode_to_logical(s, one)), 1 - 1e-10);
    }
    for (auto k : {GateKind::CNOT, GateKind::CZ}) {
      auto logical = testing::random_state(2, rng);
      auto s = encode_logical(logical, two, 14);
      Executor ex(s, rng);
      transversal_gate(ex, k, kA, kB);
      apply_gate(logical, Gate::two(k, 0, 1));
      EXPECT_GT(fidelity(logical, decode_to_logical(s, two)), 1 - 1e-10);
    }
  }
}

TEST(SteaneMagic, PreparedFromZeroWithTally) {
  for (int seed = 0; seed < 3; ++seed) {
    StateVector s(15);
    Rng rng(seed);
    Executor ex(s, rng);
    prepare_logical_zero(ex, kA, kAnc1);
    const auto before = ex.scheduled();
    prepare_magic(ex, kA, kAnc1);
    EXPECT_TRUE((ex.scheduled() - before).same_totals(21, 105, 13, 6));
    EXPECT_GT(logical_fidelity(s, kA, magic_logical()), 1 - 1e-9);
    EXPECT_TRUE(extract_and_correct(ex, kA, kAnc1).trivial());
  }
}

TEST(SteaneMeasure, DestructiveZTally) {
  auto s = encoded(logical_qubit(0, 1));
  Rng rng(8);
  Executor ex(s, rng);
  const auto m = ft_measure_z_destructive(ex, kA, kAnc1);
  EXPECT_EQ(m.bit, 1);
  EXPECT_EQ(m.votes, (std::array<int, 3>{1, 1, 1}));
  EXPECT_TRUE(ex.scheduled().same_totals(0, 42, 4, 11));
  for (int w = 0; w < 15; ++w) EXPECT_NEAR(probability_one(s, w), 0.0, 1e-12);
}

// Runs the full FT T gadget: magic prep in block B, then T on block A.
StateVector run_ft_t(const StateVector& input, Rng& rng, PhysicalTally* tally = nullptr, int* z_bit = nullptr) {
  // block B starts as bare |0>^7
  const std::array<CodeBlock, 1> a{kA};
  auto s = encode_logical(input, a, 22);
  Executor ex(s, rng);
  prepare_logical_zero(ex, kB, kAnc2);
  prepare_magic(ex, kB, kAnc2);
  const auto rec = ft_t_gate(ex, kA, kB, kAnc2);
  if (tally) *tally = ex.scheduled();
  if (z_bit) *z_bit = rec.z_bit;
  return s;
}

TEST(SteaneTGate, PlusBecomesMagicWithModelTally) {
  const double r = 1 / std::sqrt(2.0);
  std::set<int> bits;
  for (int seed = 0; seed < 4; ++seed) {
    Rng rng(seed);
    PhysicalTally t;
    int z = 0;
    const auto s = run_ft_t(logical_qubit(r, r), rng, &t, &z);
    bits.insert(z);
    EXPECT_TRUE(t.same_totals(21, 262, 50, 35)) << t.t_gates << ' ' << t.two_qubit << ' ' << t.one_qubit << ' '
                                                << t.measurements;
    EXPECT_GT(logical_fidelity(s, kB, magic_logical()), 1 - 1e-9);
    // the data block is consumed back to |0>
    for (int w : kA.wires) EXPECT_NEAR(probability_one(s, w), 0.0, 1e-12);
  }
  EXPECT_EQ(bits.size(), 2u);  // both correction branches exercised
}

TEST(SteaneTGate, ZeroStaysZero) {
  Rng rng(21);
  const auto s = run_ft_t(logical_qubit(1, 0), rng);
  EXPECT_GT(logical_fidelity(s, kB, logical_qubit(1, 0)), 1 - 1e-9);
}

TEST(SteaneTGate, TwoTGatesMakeS) {
  const double r = 1 / std::sqrt(2.0);
  StateVector s = encoded(logical_qubit(r, r), 22);
  Rng rng(31);
  Executor ex(s, rng);
  const CodeBlock after_first = apply_logical_phase(ex, kA, kB, Octant(1), kAnc2);
  ASSERT_EQ(after_first.wires, kB.wires);
  const CodeBlock after_second = apply_logical_phase(ex, kB, kA, Octant(1), kAnc2);
  ASSERT_EQ(after_second.wires, kA.wires);
  EXPECT_GT(logical_fidelity(s, kA, logical_qubit(r, C(0, r))), 1 - 1e-9);
}

TEST(SteanePhase, OctantWords) {
  const double r = 1 / std::sqrt(2.0);
  for (int k = 0; k < 8; k += 2) {
    auto s = encoded(logical_qubit(r, r), 22);
    Rng rng(k);
    Executor ex(s, rng);
    EXPECT_EQ(apply_logical_phase(ex, kA, kB, Octant(k), kAnc2).wires, kA.wires);
    EXPECT_GT(logical_fidelity(s, kA, plus_state<double>(Octant(k))), 1 - 1e-12) << k;
  }
  auto s = encoded(logical_qubit(r, r), 22);
  Rng rng(40);
  Executor ex(s, rng);
  const auto b = apply_logical_phase(ex, kA, kB, Octant(1), kAnc2);
  const auto c = apply_logical_phase(ex, b, kA, Octant(7), kAnc2);
  EXPECT_GT(logical_fidelity(s, c, logical_qubit(r, r)), 1 - 1e-9);
}

TEST(SteaneCorrection, CleanBlockHasTrivialSyndrome) {
  auto s = encoded(logical_qubit(1, 0));
  Rng rng(0);
  Executor ex(s, rng);
  const auto syn = extract_and_correct(ex, kA, kAnc1);
  EXPECT_TRUE(syn.trivial());
  EXPECT_EQ(ex.executed().count(GateKind::Z) + ex.executed().count(GateKind::X), 0);
}

TEST(SteaneCorrection, ExhaustiveSinglePauliSweep) {
  const double r = 1 / std::sqrt(2.0);
  const std::array<StateVector, 4> states{logical_qubit(1, 0), logical_qubit(0, 1), logical_qubit(r, r),
                                          magic_logical()};
  int passed = 0;
  for (std::size_t si = 0; si < states.size(); ++si) {
    for (Pauli e : {Pauli::X, Pauli::Y, Pauli::Z}) {
      for (int p = 0; p < 7; ++p) {
        auto s = encoded(states[si]);
        inject_pauli(s, kA.wires[p], e);
        Rng rng(p);
        Executor ex(s, rng);
        const auto syn = extract_and_correct(ex, kA, kAnc1);
        EXPECT_FALSE(syn.flagged);
        const double f = logical_fidelity(s, kA, states[si]);
        EXPECT_GT(f, 1 - 1e-9) << si << ' ' << pauli_char(e) << ' ' << p;
        if (f > 1 - 1e-9) ++passed;
      }
    }
  }
  EXPECT_EQ(passed, 84);
}

TEST(SteaneCorrection, ZOnPlusThenXLogicalReadsZero) {
  const double r = 1 / std::sqrt(2.0);
  for (int p = 0; p < 7; ++p) {
    auto s = encoded(logical_qubit(r, r));
    inject_pauli(s, kA.wires[p], Pauli::Z);
    Rng rng(p);
    Executor ex(s, rng);
    EXPECT_EQ(extract_and_correct(ex, kA, kAnc1).z_fix_position, p);
    EXPECT_EQ(ft_measure_operator(ex, kA, LogicalOperator::XL, kAnc1).bit, 0);
  }
}

TEST(SteaneExecutor, FaultsLandBeforeTheNumberedOp) {
  StateVector s(2);
  Rng rng(0);
  Executor ex(s, rng);
  ex.schedule_fault({1, 1, Pauli::X});
  ex.gate(Gate::one(GateKind::X, 0));
  EXPECT_EQ(ex.measure(1), 1);
  EXPECT_EQ(ex.injected_faults(), 1);
  ex.conditional(Gate::one(GateKind::Z, 0), false);
  EXPECT_EQ(ex.scheduled().one_qubit, 2);
  EXPECT_EQ(ex.executed().one_qubit, 1);
}

}  // namespace
}  // namespace bqc::steane
