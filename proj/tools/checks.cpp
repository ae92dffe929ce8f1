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

#include "checks.hpp"

#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "bqc/brickwork.hpp"
#include "bqc/compiler.hpp"
#include "bqc/errors.hpp"
#include "bqc/protocol.hpp"
#include "bqc/simcore.hpp"
#include "bqc/steane.hpp"

namespace bqc::checks {

namespace {

constexpr double kTol = 1e-9;

using brickwork::BrickPattern;
using brickwork::BrickworkLayout;
using brickwork::RowAngles;

StateVector random_state(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  StateVector::Amplitudes a(Eigen::Index(1) << n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = {g(rng), g(rng)};
  auto s = StateVector::from_amplitudes(std::move(a));
  s.normalize();
  return s;
}

BrickworkLayout random_layout(int rows, int layers, Rng& rng) {
  BrickworkLayout l(rows, layers);
  for (auto s : l.measurement_order()) l.set_angle(s, Octant(uniform_int(rng, 0, 7)));
  return l;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

Check counted(std::string name, int passed, int total, double worst = -1) {
  std::string detail = std::to_string(passed) + "/" + std::to_string(total);
  if (worst >= 0) detail += ", worst infidelity " + fmt(worst);
  return {std::move(name), passed == total, detail};
}

// Catches library exceptions so one broken property does not hide the rest.
template <class F>
Check guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {name, false, std::string("threw: ") + e.what()};
  }
}

// ---- circuit oracle for two-row layouts, built from brick unitaries

RowAngles row_at(const BrickworkLayout& l, int layer, int row) {
  const int c0 = 4 * (layer - 1) + 1;
  return {l.angle({c0, row}), l.angle({c0 + 1, row}), l.angle({c0 + 2, row}), l.angle({c0 + 3, row})};
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

Eigen::MatrixXcd two_row_unitary(const BrickworkLayout& l) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(4, 4);
  for (int layer = 1; layer <= l.layers(); ++layer) {
    Eigen::MatrixXcd step;
    if (l.partner(layer, 1)) {
      BrickPattern p;
      p.top = row_at(l, layer, 1);
      p.bottom = row_at(l, layer, 2);
      step = brickwork::brick_unitary(p);
    } else {
      step = kron(brickwork::row_unitary(row_at(l, layer, 1)), brickwork::row_unitary(row_at(l, layer, 2)));
    }
    u = step * u;
  }
  return u;
}

// ---- steane layout: one block on 0..6, ancillas after it

const steane::CodeBlock kA = steane::CodeBlock::contiguous(0);
const steane::CodeBlock kB = steane::CodeBlock::contiguous(7);

std::vector<int> wires_from(int first, int count) {
  std::vector<int> w(count);
  for (int i = 0; i < count; ++i) w[i] = first + i;
  return w;
}

double logical_fidelity(const StateVector& s, const steane::CodeBlock& b, const StateVector& expected) {
  const std::array<steane::CodeBlock, 1> blocks{b};
  return fidelity(expected, steane::decode_to_logical(s, blocks));
}

}  // namespace

std::vector<Check> simcore_suite(std::uint64_t seed) {
  std::vector<Check> out;
  Rng rng(seed);

  out.push_back(guarded("gate matrices are unitary", [&] {
    int ok = 0, total = 0;
    for (auto k : {GateKind::I, GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg, GateKind::T,
                   GateKind::Tdg}) {
      const auto m = single_qubit_matrix<double>(k);
      ++total;
      ok += (m.adjoint() * m - Matrix2<double>::Identity()).norm() < kTol;
    }
    for (int a = 0; a < 8; ++a) {
      const auto m = single_qubit_matrix<double>(GateKind::Rz, Octant(a));
      ++total;
      ok += (m.adjoint() * m - Matrix2<double>::Identity()).norm() < kTol;
    }
    return counted("gate matrices are unitary", ok, total);
  }));

  out.push_back(guarded("random circuits preserve the norm", [&] {
    int ok = 0;
    const int trials = 50;
    for (int t = 0; t < trials; ++t) {
      const int n = uniform_int(rng, 2, 8);
      auto s = random_state(n, rng);
      for (int g = 0; g < 40; ++g) {
        const int a = uniform_int(rng, 0, n - 1);
        int b = uniform_int(rng, 0, n - 2);
        if (b >= a) ++b;
        switch (uniform_int(rng, 0, 5)) {
          case 0: apply_gate(s, Gate::one(GateKind::H, a)); break;
          case 1: apply_gate(s, Gate::one(GateKind::T, a)); break;
          case 2: apply_gate(s, Gate::rz(Octant(uniform_int(rng, 0, 7)), a)); break;
          case 3: apply_gate(s, Gate::two(GateKind::CNOT, a, b)); break;
          case 4: apply_gate(s, Gate::two(GateKind::CZ, a, b)); break;
          default: apply_gate(s, Gate::two(GateKind::SWAP, a, b)); break;
        }
      }
      ok += std::abs(s.norm_squared() - 1.0) < kTol;
    }
    return counted("random circuits preserve the norm", ok, trials);
  }));

  out.push_back(guarded("gate identities (HH, SS=Z, TT=S, CNOT^2)", [&] {
    int ok = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
      const auto in = random_state(3, rng);
      auto a = in;
      apply_gate(a, Gate::one(GateKind::H, 1));
      apply_gate(a, Gate::one(GateKind::H, 1));
      auto b = in;
      apply_gate(b, Gate::one(GateKind::T, 0));
      apply_gate(b, Gate::one(GateKind::T, 0));
      auto c = in;
      apply_gate(c, Gate::one(GateKind::S, 0));
      auto d = in;
      apply_gate(d, Gate::one(GateKind::S, 2));
      apply_gate(d, Gate::one(GateKind::S, 2));
      auto e = in;
      apply_gate(e, Gate::one(GateKind::Z, 2));
      auto f = in;
      apply_gate(f, Gate::two(GateKind::CNOT, 0, 2));
      apply_gate(f, Gate::two(GateKind::CNOT, 0, 2));
      ok += fidelity(a, in) > 1 - kTol && fidelity(b, c) > 1 - kTol && fidelity(d, e) > 1 - kTol &&
            fidelity(f, in) > 1 - kTol;
    }
    return counted("gate identities (HH, SS=Z, TT=S, CNOT^2)", ok, trials);
  }));

  out.push_back(guarded("measurement follows the Born rule", [&] {
    // |0> + e^{i pi/4}|1> after H has P(1) = (2 - sqrt 2)/4
    const double p = (2 - std::sqrt(2.0)) / 4;
    const int shots = 20000;
    int ones = 0;
    for (int i = 0; i < shots; ++i) {
      auto s = plus_state<double>(Octant(1));
      apply_gate(s, Gate::one(GateKind::H, 0));
      ones += measure_z(s, 0, rng);
    }
    const double sigma = std::sqrt(p * (1 - p) / shots);
    const double freq = static_cast<double>(ones) / shots;
    return Check{"measurement follows the Born rule", std::abs(freq - p) < 5 * sigma,
                 "P(1) " + std::to_string(freq) + " vs " + std::to_string(p)};
  }));

  out.push_back(guarded("post-measurement state is normalized", [&] {
    int ok = 0;
    const int trials = 50;
    for (int t = 0; t < trials; ++t) {
      auto s = random_state(4, rng);
      measure_z(s, uniform_int(rng, 0, 3), rng);
      ok += std::abs(s.norm_squared() - 1.0) < kTol;
    }
    return counted("post-measurement state is normalized", ok, trials);
  }));
  return out;
}

std::vector<Check> steane_suite(std::uint64_t seed) {
  std::vector<Check> out;
  const double r = 1 / std::sqrt(2.0);
  const auto anc1 = wires_from(7, 8);
  const auto anc2 = wires_from(14, 8);

  out.push_back(guarded("single Pauli errors on 4 logical states", [&] {
    const std::array<StateVector, 4> states{qubit_state<double>(1, 0), qubit_state<double>(0, 1),
                                            qubit_state<double>(r, r), plus_state<double>(Octant(1))};
    int ok = 0;
    double worst = 0;
    for (const auto& logical : states)
      for (Pauli e : {Pauli::X, Pauli::Y, Pauli::Z})
        for (int p = 0; p < 7; ++p) {
          const std::array<steane::CodeBlock, 1> blocks{kA};
          auto s = steane::encode_logical(logical, blocks, 15);
          inject_pauli(s, kA.wires[p], e);
          Rng rng(seed + p);
          steane::Executor ex(s, rng);
          const auto syn = steane::extract_and_correct(ex, kA, anc1);
          const double f = logical_fidelity(s, kA, logical);
          worst = std::max(worst, 1 - f);
          ok += !syn.flagged && f > 1 - kTol;
        }
    return counted("single Pauli errors on 4 logical states", ok, 84, worst);
  }));

  out.push_back(guarded("FT T gate on |+>_L gives the magic state", [&] {
    int ok = 0;
    double worst = 0;
    const int trials = 4;
    for (int t = 0; t < trials; ++t) {
      Rng rng(seed + 100 + t);
      const std::array<steane::CodeBlock, 1> a{kA};
      auto s = steane::encode_logical(qubit_state<double>(r, r), a, 22);
      steane::Executor ex(s, rng);
      steane::prepare_logical_zero(ex, kB, anc2);
      steane::prepare_magic(ex, kB, anc2);
      steane::ft_t_gate(ex, kA, kB, anc2);
      // the gadget leaves its output in the magic block
      const double f = logical_fidelity(s, kB, plus_state<double>(Octant(1)));
      worst = std::max(worst, 1 - f);
      ok += f > 1 - kTol;
    }
    return counted("FT T gate on |+>_L gives the magic state", ok, trials, worst);
  }));

  out.push_back(guarded("channel hop with one error, every angle class", [&] {
    Rng rng(seed + 200);
    int ok = 0;
    for (int theta = 0; theta < 8; theta += 2)
      for (int q = 0; q < 7; ++q)
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
          const int bit = (theta / 2 + q) % 2;
          protocol::PipelineConfig cfg;
          cfg.theta = Octant(theta);
          cfg.delta = Octant(theta + 4 * bit);
          cfg.forced_error = protocol::ChannelError{q, p};
          const auto res = protocol::run_logical_qubit(cfg, rng);
          ok += res.fidelity > 1 - kTol && res.bit == bit;
        }
    return counted("channel hop with one error, every angle class", ok, 84);
  }));
  return out;
}

std::vector<Check> brickwork_suite(std::uint64_t seed) {
  std::vector<Check> out;
  Rng rng(seed);
  for (auto kind : {GateKind::I, GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg, GateKind::T,
                    GateKind::Tdg, GateKind::CNOT}) {
    const std::string name = std::string("brick ") + std::string(gate_name(kind)) + " matches its gate";
    out.push_back(guarded(name, [&] {
      BrickworkLayout layout(2, 1);
      brickwork::place_pattern(layout, 1, 1, brickwork::gate_pattern(kind));
      int ok = 0;
      double worst = 0;
      for (int t = 0; t < 20; ++t) {
        const auto in = random_state(2, rng);
        auto expected = in;
        if (kind == GateKind::CNOT)
          apply_gate(expected, Gate::two(GateKind::CNOT, 0, 1));
        else if (kind != GateKind::I)
          apply_gate(expected, Gate::one(kind, 0));
        const double f = fidelity(brickwork::run_mbqc(layout, in, rng).output, expected);
        worst = std::max(worst, 1 - f);
        ok += f > 1 - kTol;
      }
      return counted(name, ok, 20, worst);
    }));
  }
  out.push_back(guarded("census formula", [&] {
    const auto a = brickwork::brick_census(35, 612);
    const auto b = brickwork::brick_census(3, 14);
    const bool ok = a.bricks == 10404 && a.half_bricks == 612 && a.qubits == 85715 && b.bricks == 14 &&
                    b.half_bricks == 14 && b.qubits == 171;
    return Check{"census formula", ok, "35x612 -> " + std::to_string(a.qubits) + " qubits"};
  }));
  return out;
}

std::vector<Check> equivalence_suite(std::uint64_t seed) {
  std::vector<Check> out;
  Rng rng(seed);
  out.push_back(guarded("BFK on random 2-row layouts matches the circuit", [&] {
    int ok = 0;
    double worst = 0;
    const int layouts = 20;
    for (int i = 0; i < layouts; ++i) {
      const auto layout = random_layout(2, 1 + i % 2, rng);
      const auto in = random_state(2, rng);
      protocol::RunConfig cfg;
      cfg.seed = seed * 1000 + i;
      cfg.backend = protocol::Backend::Exact;
      const auto res = protocol::run_bfk_basic(layout, in, cfg);
      const auto expected = StateVector::from_amplitudes(two_row_unitary(layout) * in.amplitudes());
      const double f = res.output ? fidelity(*res.output, expected) : 0.0;
      worst = std::max(worst, 1 - f);
      ok += f > 1 - kTol && !res.failed;
    }
    return counted("BFK on random 2-row layouts matches the circuit", ok, layouts, worst);
  }));
  out.push_back(guarded("protocol 1 on random 2-row layouts matches the circuit", [&] {
    int ok = 0;
    const int layouts = 10;
    for (int i = 0; i < layouts; ++i) {
      const auto layout = random_layout(2, 1 + i % 2, rng);
      const auto in = random_state(2, rng);
      protocol::RunConfig cfg;
      cfg.seed = seed * 1000 + 500 + i;
      const auto res = protocol::run_protocol1(layout, in, cfg);
      const auto expected = StateVector::from_amplitudes(two_row_unitary(layout) * in.amplitudes());
      ok += res.output && fidelity(*res.output, expected) > 1 - kTol;
    }
    return counted("protocol 1 on random 2-row layouts matches the circuit", ok, layouts);
  }));
  out.push_back(guarded("circuit reading agrees on wider layouts", [&] {
    int ok = 0;
    const int trials = 12;
    for (int i = 0; i < trials; ++i) {
      const auto layout = random_layout(3 + i % 3, 2, rng);
      const auto in = random_state(layout.rows(), rng);
      protocol::RunConfig cfg;
      cfg.seed = seed * 1000 + 800 + i;
      const auto res = protocol::run_bfk_basic(layout, in, cfg);
      ok += res.output && fidelity(*res.output, brickwork::apply_layout_as_circuit(layout, in)) > 1 - kTol;
    }
    return counted("circuit reading agrees on wider layouts", ok, trials);
  }));
  return out;
}

std::vector<Check> blindness_suite(std::uint64_t seed) {
  std::vector<Check> out;
  Rng rng(seed);
  const auto layout = random_layout(2, 1, rng);

  out.push_back(guarded("delta uniform per coordinate (10000 runs)", [&] {
    const auto rep = protocol::blindness_audit(protocol::collect_angle_samples(layout, 10000, seed * 100000));
    double min_p = 1.0;
    for (const auto& c : rep.coordinates) min_p = std::min(min_p, c.p_value);
    std::ostringstream d;
    d << rep.coordinates.size() << " coordinates, min p " << min_p << " (threshold " << rep.threshold << ")";
    return Check{"delta uniform per coordinate (10000 runs)", rep.passed && min_p > rep.threshold, d.str()};
  }));

  out.push_back(guarded("phi/delta mutual information near zero", [&] {
    const auto rep = protocol::blindness_audit(protocol::collect_angle_samples(layout, 10000, seed * 100000 + 50000));
    std::ostringstream d;
    d << "MI " << rep.mutual_information << " bits, bias " << rep.mi_bias << ", G-test p "
      << rep.independence_p_value;
    return Check{"phi/delta mutual information near zero",
                 rep.passed && rep.mutual_information < 0.01, d.str()};
  }));

  out.push_back(guarded("Bob view identical in shape across same-size layouts", [&] {
    const auto a = random_layout(3, 2, rng);
    const auto b = random_layout(3, 2, rng);
    protocol::RunConfig cfg;
    cfg.backend = protocol::Backend::Tally;
    int ok = 0;
    for (int p = 0; p < 3; ++p) {
      cfg.seed = seed + 10 * p;
      auto run = p == 0 ? protocol::run_bfk_basic : p == 1 ? protocol::run_protocol1 : protocol::run_protocol2_bsa;
      const auto ta = run(a, std::nullopt, cfg).transcript;
      cfg.seed += 1;
      const auto tb = run(b, std::nullopt, cfg).transcript;
      protocol::audit_bob_view(ta);
      protocol::audit_bob_view(tb);
      ok += protocol::schema_signature(ta) == protocol::schema_signature(tb);
    }
    return counted("Bob view identical in shape across same-size layouts", ok, 3);
  }));

  out.push_back(guarded("audit catches a leaking announcement", [&] {
    std::vector<protocol::AngleSample> leak;
    for (int i = 0; i < 2000; ++i) leak.push_back({{1, 1}, Octant(i % 8), Octant(i % 8)});
    const auto rep = protocol::blindness_audit(leak);
    return Check{"audit catches a leaking announcement", !rep.passed, "MI " + std::to_string(rep.mutual_information)};
  }));
  return out;
}

Check qcla_functional(std::uint64_t seed) {
  return guarded("QCLA adds correctly", [&] {
    Rng rng(seed);
    std::int64_t cases = 0, bad = 0;
    for (int bits = 1; bits <= 8; ++bits) {
      compiler::QclaWires w;
      const auto c = compiler::qcla_adder(bits, &w);
      const std::uint64_t top = std::uint64_t(1) << bits;
      auto one = [&](std::uint64_t a, std::uint64_t b) {
        ++cases;
        try {
          bad += compiler::qcla_add(c, w, a, b) != a + b;
        } catch (const std::exception&) {
          ++bad;
        }
      };
      if (bits <= 5) {
        for (std::uint64_t a = 0; a < top; ++a)
          for (std::uint64_t b = 0; b < top; ++b) one(a, b);
      } else {
        std::uniform_int_distribution<std::uint64_t> d(0, top - 1);
        for (int i = 0; i < 1000; ++i) one(d(rng), d(rng));
      }
    }
    return Check{"QCLA adds correctly", bad == 0,
                 std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches"};
  });
}

const std::vector<std::pair<std::string, std::function<std::vector<Check>(std::uint64_t)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<std::vector<Check>(std::uint64_t)>>> all{
      {"simcore", simcore_suite},     {"steane", steane_suite},         {"brickwork", brickwork_suite},
      {"equivalence", equivalence_suite}, {"blindness", blindness_suite},
  };
  return all;
}

}  // namespace bqc::checks
