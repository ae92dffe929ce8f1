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

#include "bqc/brickwork.hpp"
#include "bqc/compiler.hpp"
#include "test_util.hpp"

namespace bqc::compiler {
namespace {

StateVector simulate(const CircuitIR& c, StateVector s) {
  for (const auto& g : c.gates) apply_gate(s, g);
  return s;
}

// Moves logical wire w to physical wire pos[w].
StateVector permute(const StateVector& s, const std::vector<int>& pos) {
  const int n = s.num_qubits();
  StateVector::Amplitudes out(s.dimension());
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(s.dimension()); ++i) {
    std::uint64_t j = 0;
    for (int w = 0; w < n; ++w)
      if (i >> (n - 1 - w) & 1) j |= std::uint64_t(1) << (n - 1 - pos[w]);
    out(static_cast<Eigen::Index>(j)) = s[static_cast<Eigen::Index>(i)];
  }
  return StateVector::from_amplitudes(std::move(out));
}

CircuitIR random_circuit(int wires, int length, Rng& rng, bool adjacent_only) {
  static const GateKind singles[] = {GateKind::H, GateKind::X, GateKind::Z, GateKind::S,
                                     GateKind::Sdg, GateKind::T, GateKind::Tdg};
  CircuitIR c(wires);
  for (int i = 0; i < length; ++i) {
    const int pick = uniform_int(rng, 0, wires > 1 ? 9 : 6);
    if (pick < 7) {
      c.add(Gate::one(singles[pick], uniform_int(rng, 0, wires - 1)));
    } else if (adjacent_only) {
      const int a = uniform_int(rng, 0, wires - 2);
      c.add(pick % 2 ? Gate::two(GateKind::CNOT, a, a + 1) : Gate::two(GateKind::CNOT, a + 1, a));
    } else {
      const int a = uniform_int(rng, 0, wires - 1);
      int b = uniform_int(rng, 0, wires - 2);
      if (b >= a) ++b;
      switch (pick) {
        case 7: c.add(Gate::two(GateKind::CNOT, a, b)); break;
        case 8: c.add(Gate::two(GateKind::CZ, a, b)); break;
        default:
          if (wires >= 3) {
            int t = 0;
            while (t == a || t == b) ++t;
            c.add(Gate::toffoli(a, b, t));
          } else {
            c.add(Gate::two(GateKind::SWAP, a, b));
          }
      }
    }
  }
  return c;
}

TEST(Qcla, TenBitGateCounts) {
  QclaWires w;
  const auto adder = qcla_adder(10, &w);
  EXPECT_EQ(adder.wire_count, 35);
  EXPECT_EQ(w.wire_count, 35);
  const auto t = tally(adder);
  EXPECT_EQ(t.toffoli, 63);
  EXPECT_EQ(t.cnot, 35);
  EXPECT_EQ(t.not_gates, 18);
  EXPECT_EQ(qcla_ancillas(10), 5);
}

TEST(Qcla, WireCountFormula) {
  for (int bits = 1; bits <= 20; ++bits) {
    const auto adder = qcla_adder(bits);
    EXPECT_EQ(adder.wire_count, 3 * bits + qcla_ancillas(bits)) << bits;
  }
  EXPECT_THROW(qcla_adder(0), ArgumentError);
}

TEST(Qcla, ThreePlusFiveOnTenBits) {
  QclaWires w;
  const auto adder = qcla_adder(10, &w);
  EXPECT_EQ(qcla_add(adder, w, 3, 5), 8u);
  EXPECT_EQ(qcla_add(adder, w, 1023, 1023), 2046u);
}

TEST(Qcla, OneBitTruthTable) {
  QclaWires w;
  const auto adder = qcla_adder(1, &w);
  for (std::uint64_t a = 0; a < 2; ++a)
    for (std::uint64_t b = 0; b < 2; ++b) EXPECT_EQ(qcla_add(adder, w, a, b), a + b);
}

TEST(Qcla, ExhaustiveSmallWidths) {
  for (int bits = 1; bits <= 5; ++bits) {
    QclaWires w;
    const auto adder = qcla_adder(bits, &w);
    for (std::uint64_t a = 0; a < (1u << bits); ++a)
      for (std::uint64_t b = 0; b < (1u << bits); ++b) ASSERT_EQ(qcla_add(adder, w, a, b), a + b) << bits;
  }
}

TEST(Qcla, RandomPairsWiderWidths) {
  Rng rng(5);
  for (int bits : {6, 7, 8, 10, 16, 33}) {
    QclaWires w;
    const auto adder = qcla_adder(bits, &w);
    std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t(1) << bits) - 1);
    for (int i = 0; i < 1000; ++i) {
      const auto a = d(rng), b = d(rng);
      ASSERT_EQ(qcla_add(adder, w, a, b), a + b) << bits;
    }
  }
}

TEST(Decompose, AdderGateCounts) {
  const auto t = tally(decompose(qcla_adder(10)));
  EXPECT_EQ(t.t_count, 441);
  EXPECT_EQ(t.two_qubit_clifford, 413);
  EXPECT_EQ(t.cnot, 413);
  EXPECT_EQ(t.one_qubit_clifford, 144);
  EXPECT_EQ(t.toffoli, 0);
}

TEST(Decompose, ToffoliOnBasisStates) {
  CircuitIR c(3);
  c.add(Gate::toffoli(0, 1, 2));
  const auto d = decompose(c);
  const auto t = tally(d);
  EXPECT_EQ(t.t_count, 7);
  EXPECT_EQ(t.cnot, 6);
  EXPECT_EQ(t.hadamard, 2);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const auto out = simulate(d, testing::basis_state(3, x));
    const std::uint64_t expected = (x & 6) == 6 ? x ^ 1 : x;
    EXPECT_GT(fidelity(out, testing::basis_state(3, expected)), 1 - 1e-12) << x;
  }
}

TEST(Decompose, PreservesRandomCircuits) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform_int(rng, 2, 4);
    auto c = random_circuit(n, 12, rng, false);
    c.add(Gate::rz(Octant(uniform_int(rng, 0, 7)), 0));
    c.add(Gate::two(GateKind::CPhase, 0, 1));
    const auto d = decompose(c);
    for (std::uint64_t x = 0; x < (1u << n); ++x) {
      const auto in = testing::basis_state(n, x);
      EXPECT_GT(fidelity(simulate(c, in), simulate(d, in)), 1 - 1e-9) << trial << " input " << x;
    }
  }
}

TEST(Decompose, EmptyCircuitStaysEmpty) {
  EXPECT_TRUE(decompose(CircuitIR(3)).gates.empty());
  CircuitIR only_identity(2);
  only_identity.add(Gate::one(GateKind::I, 1));
  EXPECT_TRUE(decompose(only_identity).gates.empty());
}

TEST(Route, AdjacentCnotsOnlyAndSemanticsUpToPermutation) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform_int(rng, 2, 4);
    const auto c = decompose(random_circuit(n, 14, rng, false));
    const auto r = insert_swaps(c);
    for (const auto& g : r.circuit.gates)
      if (g.arity() == 2) ASSERT_EQ(std::abs(g.wires[0] - g.wires[1]), 1);
    for (std::uint64_t x = 0; x < (1u << n); ++x) {
      const auto in = testing::basis_state(n, x);
      const auto expected = permute(simulate(c, in), r.final_position);
      EXPECT_GT(fidelity(simulate(r.circuit, in), expected), 1 - 1e-9) << trial << " input " << x;
    }
    EXPECT_EQ(tally(r.circuit).cnot, tally(c).cnot + 3 * r.swaps);
  }
}

TEST(Route, DistantCnotOnAllBasisStates) {
  CircuitIR c(3);
  c.add(Gate::two(GateKind::CNOT, 0, 2));
  const auto r = insert_swaps(c);
  EXPECT_GE(r.swaps, 1);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const auto in = testing::basis_state(3, x);
    EXPECT_GT(fidelity(simulate(r.circuit, in), permute(simulate(c, in), r.final_position)), 1 - 1e-12) << x;
  }
}

TEST(Route, AdjacentCircuitUnchanged) {
  Rng rng(19);
  const auto c = random_circuit(4, 25, rng, true);
  const auto r = insert_swaps(c);
  EXPECT_EQ(r.swaps, 0);
  EXPECT_EQ(r.circuit, c);
  EXPECT_EQ(r.final_position, (std::vector<int>{0, 1, 2, 3}));
}

TEST(Route, AdderSwapCountInBand) {
  const auto r = insert_swaps(decompose(qcla_adder(10)));
  EXPECT_GE(r.swaps, 279);
  EXPECT_LE(r.swaps, 377);
}

TEST(Route, RejectsUndecomposedGates) {
  CircuitIR c(3);
  c.add(Gate::toffoli(0, 1, 2));
  EXPECT_THROW(insert_swaps(c), UnsupportedGateError);
}

TEST(Place, SingleHadamard) {
  for (int wires : {1, 2}) {
    CircuitIR c(wires);
    c.add(Gate::one(GateKind::H, 0));
    const auto p = place_bricks(c);
    EXPECT_EQ(p.layout.rows(), 2);
    EXPECT_EQ(p.layout.layers(), 1);
    EXPECT_EQ(p.layout.census().qubits, 10);
  }
}

TEST(Place, ToffoliFitsInSixteenLayers) {
  CircuitIR c(3);
  c.add(Gate::toffoli(0, 1, 2));
  const auto p = place_bricks(insert_swaps(decompose(c)).circuit);
  EXPECT_LE(p.layout.layers(), 16);
}

TEST(Place, AdderFitsInSevenHundredLayers) {
  const auto p = place_bricks(insert_swaps(decompose(qcla_adder(10))).circuit);
  EXPECT_EQ(p.layout.rows(), 35);
  EXPECT_LE(p.layout.layers(), 700);
}

TEST(Place, RejectsDistantCnot) {
  CircuitIR c(3);
  c.add(Gate::two(GateKind::CNOT, 0, 2));
  EXPECT_THROW(place_bricks(c), ArgumentError);
  CircuitIR r(2);
  r.add(Gate::rz(Octant(3), 0));
  EXPECT_THROW(place_bricks(r), UnsupportedGateError);
}

TEST(Place, MbqcMatchesDirectSimulation) {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = uniform_int(rng, 1, 3);
    const auto c = random_circuit(n, uniform_int(rng, 1, 10), rng, true);
    const auto p = place_bricks(c);
    const int rows = p.layout.rows();
    const auto in = testing::random_state(rows, rng);
    CircuitIR padded = c;
    padded.wire_count = rows;
    const auto out = brickwork::run_mbqc(p.layout, in, rng).output;
    EXPECT_GT(fidelity(out, simulate(padded, in)), 1 - 1e-9) << trial << "\n" << write_circuit(c);
  }
}

TEST(Circuit, TextRoundTrip) {
  Rng rng(29);
  auto c = random_circuit(4, 20, rng, false);
  c.add(Gate::rz(Octant(5), 2));
  EXPECT_EQ(parse_circuit(write_circuit(c)), c);
  const auto named = parse_circuit("wire a\nwire b\nH a\nCNOT a b  # entangle\n");
  EXPECT_EQ(named.wire_count, 2);
  EXPECT_EQ(named.gates.size(), 2u);
  EXPECT_EQ(parse_circuit(write_circuit(named)), named);
}

TEST(Circuit, ParseErrorsCarryLineNumbers) {
  try {
    parse_circuit("wires 2\nH 0\nFOO 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_circuit("wires 2\nCNOT 0 5\n"), ParseError);
  EXPECT_THROW(parse_circuit("wires 2\nCNOT 1 1\n"), ParseError);
  EXPECT_THROW(parse_circuit("RZ x 0\n"), ParseError);
}

TEST(Circuit, EmptyTallyIsZero) { EXPECT_EQ(tally(CircuitIR(4)), GateTally{}); }

TEST(Circuit, TallyCategoriesAreConsistent) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_circuit(4, 30, rng, false);
    const auto t = tally(c);
    const auto d = tally(decompose(c));
    EXPECT_LE(t.cnot, t.two_qubit_clifford);
    EXPECT_LE(t.not_gates + t.hadamard, t.one_qubit_clifford);
    EXPECT_EQ(d.t_count, t.t_count + 7 * t.toffoli);
    EXPECT_EQ(d.two_qubit_clifford, d.cnot);
    // CZ turns into one CNOT and two H
    const auto cz = t.two_qubit_clifford - t.cnot;
    EXPECT_EQ(d.cnot, 6 * t.toffoli + t.cnot + cz + 3 * t.swap);
    EXPECT_EQ(d.hadamard, t.hadamard + 2 * t.toffoli + 2 * cz);
    EXPECT_EQ(d.toffoli + d.swap, 0);
  }
}

TEST(Circuit, ClassicalSimulationMatchesStatevector) {
  CircuitIR c = qcla_adder(3);
  for (std::uint64_t x = 0; x < 64; x += 7) {
    std::vector<std::uint8_t> bits(c.wire_count, 0);
    std::uint64_t idx = 0;
    for (int w = 0; w < 6 && w < c.wire_count; ++w) {
      bits[w] = x >> w & 1;
      if (bits[w]) idx |= std::uint64_t(1) << (c.wire_count - 1 - w);
    }
    simulate_classical(c, bits);
    std::uint64_t expected = 0;
    for (int w = 0; w < c.wire_count; ++w)
      if (bits[w]) expected |= std::uint64_t(1) << (c.wire_count - 1 - w);
    const auto out = simulate(c, testing::basis_state(c.wire_count, idx));
    EXPECT_NEAR(std::abs(out[static_cast<Eigen::Index>(expected)]), 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace bqc::compiler
