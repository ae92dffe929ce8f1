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

#include "bqc/errors.hpp"
#include "bqc/ledger.hpp"

namespace bqc::ledger {
namespace {

const brickwork::Census kAdderLayout = brickwork::brick_census(35, 612);

TEST(CostModel, ConstantsAreSelfConsistent) {
  const CostModel m;
  EXPECT_NO_THROW(m.check_consistency());
  EXPECT_EQ(phase_shift_mean(m), cost(Rational(21, 2), 131, Rational(121, 4), Rational(35, 2)));
  EXPECT_EQ(m.zero_prep + m.transversal_1q + m.phase_shift_avg, m.alice_prep_avg);
  CostModel broken;
  broken.alice_prep_avg.t_gates = 11;
  EXPECT_THROW(broken.check_consistency(), std::logic_error);
}

TEST(CostModel, PhaseWordsPerOctant) {
  const CostModel m;
  EXPECT_EQ(phase_shift_cost(m, Octant(0)), CostVector{});
  EXPECT_EQ(phase_shift_cost(m, Octant(1)), m.ft_t);
  EXPECT_EQ(phase_shift_cost(m, Octant(2)), m.transversal_1q);
  EXPECT_EQ(phase_shift_cost(m, Octant(7)), m.ft_t + m.transversal_1q);
  EXPECT_EQ(alice_prep_cost(m, Octant(0)), cost(0, 108, 26, 18));
}

TEST(CostModel, BrickAndHalfBrick) {
  const CostModel m;
  EXPECT_EQ(brick_cost(m), cost(84, 1454, 330, 228));
  EXPECT_EQ(half_brick_cost(m), cost(42, 720, 165, 114));
  EXPECT_EQ(brick_cost(m), Rational(2) * half_brick_cost(m) + cost(0, 14, 0, 0));
}

TEST(CostVector, ArithmeticStaysExact) {
  const auto a = cost(Rational(1, 4), 3, Rational(5, 2), 0);
  EXPECT_EQ(Rational(4) * a, cost(1, 12, 10, 0));
  EXPECT_EQ(a + a - a, a);
  CostVector q;
  q.transmitted = 3;
  EXPECT_EQ((std::int64_t(5) * q).transmitted, 15);
}

TEST(Estimate, AdderTotals) {
  const EstimateInput in{kAdderLayout, compiler::GateTally{441, 413, 144, 0, 0, 0, 413, 0, 0}};
  const auto p1 = estimate(Protocol::Protocol1, in);
  EXPECT_EQ(p1.party("alice"), (CostVector{Rational(1800015, 2), 20485885, Rational(19285875, 4), Rational(6085765, 2),
                                           7 * 85715}));
  EXPECT_EQ(p1.party("bob"), cost(899640, 15568056, 3534300, 2441880));
  const auto p2 = estimate(Protocol::Protocol2, in);
  EXPECT_EQ(p2.party("bob_prep"), cost(7200060, 163887080, 38571750, 24343060));
  EXPECT_EQ(p2.party("bob_compute"), p1.party("bob"));
  EXPECT_EQ(p2.party("alice").transmitted, 63 * 85715);
  EXPECT_EQ(estimate(Protocol::FtCircuit, in).party("circuit"), cost(9261, 118433, 23058, 15435));
  const auto bfk = estimate(Protocol::BfkBasic, in);
  EXPECT_EQ(bfk.party("bob"), cost(42840, 106488, 149940, 85680));
  EXPECT_EQ(bfk.party("alice").transmitted, 85715);
}

TEST(Estimate, BobIsBricksTimesBrickCost) {
  const CostModel m;
  for (int n = 2; n <= 12; ++n)
    for (int layers = 1; layers <= 9; layers += 2) {
      const auto c = brickwork::brick_census(n, layers);
      const auto r = estimate(Protocol::Protocol1, {c, std::nullopt});
      EXPECT_EQ(r.party("bob"), Rational(c.bricks) * brick_cost(m) + Rational(c.half_bricks) * half_brick_cost(m))
          << n << "x" << layers;
    }
}

TEST(Estimate, MissingInputsAreArgumentErrors) {
  EXPECT_THROW(estimate(Protocol::Protocol1, {}), ArgumentError);
  EXPECT_THROW(estimate(Protocol::FtCircuit, {kAdderLayout, std::nullopt}), ArgumentError);
  compiler::GateTally raw;
  raw.toffoli = 1;
  EXPECT_THROW(estimate(Protocol::FtCircuit, {std::nullopt, raw}), ArgumentError);
}

TEST(Estimate, ComparisonRowIsQualitativeOnly) {
  const auto r = estimate(Protocol::BfkFtComparison, {});
  EXPECT_TRUE(r.parties.empty());
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_NE(r.notes[0].find("linearly"), std::string::npos);
}

TEST(Estimate, ProtocolNamesRoundTrip) {
  for (auto p : {Protocol::BfkBasic, Protocol::Protocol1, Protocol::Protocol2, Protocol::FtCircuit,
                 Protocol::BfkFtComparison})
    EXPECT_EQ(protocol_from_name(protocol_name(p)), p);
  EXPECT_FALSE(protocol_from_name("protocol3"));
}

TEST(PerOctant, UniformHistogramGivesTheAverage) {
  const auto c = brickwork::brick_census(4, 6);  // 96 measured, 100 qubits
  for (auto p : {Protocol::BfkBasic, Protocol::Protocol1, Protocol::Protocol2}) {
    const std::int64_t prepared = p == Protocol::Protocol2 ? 8 * c.qubits : c.qubits;
    OctantCounts prep{}, meas{};
    for (int k = 0; k < 8; ++k) {
      prep[k] = p == Protocol::BfkBasic ? 0 : prepared / 8;
      meas[k] = c.measured / 8;
    }
    if (p != Protocol::BfkBasic) prep[0] += prepared % 8;
    const auto exact = estimate_per_octant(p, c, prep, meas);
    const auto avg = estimate(p, {c, std::nullopt});
    EXPECT_EQ(exact.party("bob").gates(), avg.party("bob").gates()) << protocol_name(p);
    if (p == Protocol::Protocol1 && prepared % 8 == 0) EXPECT_EQ(exact.party("alice"), avg.party("alice"));
  }
}

TEST(PerOctant, AllZeroAnglesNeedNoT) {
  OctantCounts prep{}, meas{};
  prep[0] = kAdderLayout.qubits;
  meas[0] = kAdderLayout.measured;
  const auto r = estimate_per_octant(Protocol::Protocol1, kAdderLayout, prep, meas);
  EXPECT_EQ(r.party("alice").t_gates, Rational(0));
  EXPECT_EQ(r.party("bob").t_gates, Rational(0));
  meas[0] -= 1;
  EXPECT_THROW(estimate_per_octant(Protocol::Protocol1, kAdderLayout, prep, meas), ArgumentError);
}

TEST(Sampled, ConvergesToTheAverageWithinOnePercent) {
  Rng rng(2024);
  for (auto p : {Protocol::BfkBasic, Protocol::Protocol1, Protocol::Protocol2}) {
    const auto s = estimate_sampled(p, kAdderLayout, rng);
    const auto avg = estimate(p, {kAdderLayout, std::nullopt});
    for (std::size_t i = 0; i < avg.parties.size(); ++i) {
      const auto a = avg.parties[i].cost.gates(), b = s.parties[i].cost.gates();
      for (int k = 0; k < 4; ++k) {
        if (a[k] == Rational(0)) {
          EXPECT_EQ(b[k], Rational(0));
          continue;
        }
        const double rel = boost::rational_cast<double>((b[k] - a[k]) / a[k]);
        EXPECT_LT(std::abs(rel), 0.01) << protocol_name(p) << " " << avg.parties[i].party << " category " << k;
      }
    }
  }
}

TEST(Rounding, HalfAwayFromZero) {
  EXPECT_EQ(round_half_away(Rational(5, 2)), 3);
  EXPECT_EQ(round_half_away(Rational(-5, 2)), -3);
  EXPECT_EQ(round_half_away(Rational(42840, 441)), 97);
  EXPECT_EQ(round_half_away(Rational(7, 3)), 2);
  EXPECT_EQ(format_ratio(Rational(4343, 2)), "2,172x");
  EXPECT_EQ(format_ratio(std::nullopt), "n/a");
}

TEST(Formatting, ExactDecimals) {
  EXPECT_EQ(format_rational(Rational(19285875, 4), true), "4,821,468.75");
  EXPECT_EQ(format_rational(Rational(1800015, 2)), "900007.5");
  EXPECT_EQ(format_rational(Rational(-1, 8)), "-0.125");
  EXPECT_EQ(format_rational(Rational(1, 3)), "1/3");
  EXPECT_EQ(format_rational(Rational(1000), true), "1,000");
}

TEST(Tables, EveryReferenceValueReproduces) {
  for (const auto& r : reference_check()) EXPECT_TRUE(r.ok()) << r.key << ": " << r.actual << " vs " << r.expected;
}

TEST(Tables, ZeroBaselineIsNotAvailable) {
  auto in = adder_benchmark();
  in.target.t_count = 0;
  const auto t = ratio_tables(in);
  EXPECT_FALSE(t[0].rows[0].cells[0]);
  EXPECT_TRUE(t[0].rows[0].cells[1]);
  EXPECT_NE(to_text(t[0]).find("n/a"), std::string::npos);
}

TEST(Reports, TextCsvJson) {
  const auto in = adder_benchmark();
  const auto text = to_text(in.protocol1);
  EXPECT_NE(text.find("900,007.5"), std::string::npos);
  const auto csv = to_csv(in.protocol1);
  EXPECT_NE(csv.find("protocol1,alice,900007.5,20485885,4821468.75,3042882.5,600005"), std::string::npos) << csv;
  const auto j = to_json(in.protocol2);
  EXPECT_EQ(j["protocol"], "protocol2");
  EXPECT_EQ(j["parties"][1]["party"], "bob_prep");
  EXPECT_EQ(j["parties"][1]["t_gates"], "7200060");
  const auto tj = to_json(ratio_tables(in)[1]);
  EXPECT_EQ(tj["rows"][2]["cells"][1]["rounded"], 1515);
  EXPECT_NE(to_csv(ratio_tables(in)[0]).find("\"1,041x\""), std::string::npos);
}

TEST(Agreement, SimulatedTalliesMatchTheModel) {
  Rng rng(3);
  const auto rows = simulate_primitives(CostModel{}, rng);
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) EXPECT_TRUE(r.matches()) << r.operation << ": " << r.discrepancy();
}

TEST(Agreement, DiscrepancyIsItemized) {
  AgreementRow r{"x", cost(1, 2, 3, 4), cost(1, 5, 3, Rational(7, 2))};
  EXPECT_FALSE(r.matches());
  EXPECT_EQ(r.discrepancy(), "2q +3, meas -0.5");
}

}  // namespace
}  // namespace bqc::ledger
