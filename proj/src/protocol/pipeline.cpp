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

#include "bqc/protocol/run.hpp"

#include <numeric>

#include "bqc/errors.hpp"

namespace bqc::protocol {

namespace {

ledger::CostVector to_cost(const steane::PhysicalTally& t) {
  return ledger::cost(t.t_gates, t.two_qubit, t.one_qubit, t.measurements);
}

std::vector<ChannelError> sample_errors(double p, Rng& rng) {
  ProtocolMessage m{Direction::AliceToBob, 0, QubitTransfer{{1, 1}, 0, steane::kBlockSize, -1}};
  return step_channel({p, 0.0, 0}, m, rng).errors;
}

}  // namespace

PipelineResult run_logical_qubit(const PipelineConfig& cfg, Rng& rng) {
  ChannelConfig{cfg.depolarizing, 0.0, 0}.validate();
  using steane::CodeBlock;
  const Octant bob_phase = -cfg.delta;
  // a T-containing word needs a second block
  const bool wide = cfg.theta.k() % 2 || bob_phase.k() % 2;
  const CodeBlock a = CodeBlock::contiguous(0);
  const CodeBlock b = wide ? CodeBlock::contiguous(steane::kBlockSize) : a;
  std::vector<int> anc(steane::kAncillaWires);
  std::iota(anc.begin(), anc.end(), wide ? 2 * steane::kBlockSize : steane::kBlockSize);
  StateVector state(anc.back() + 1);
  steane::Executor ex(state, rng);

  PipelineResult res;
  steane::prepare_logical_zero(ex, a, anc);
  steane::transversal_gate(ex, GateKind::H, a);
  const CodeBlock data = steane::apply_logical_phase(ex, a, b, cfg.theta, anc);
  const CodeBlock spare = data.wires == a.wires ? b : a;
  res.prep = to_cost(ex.scheduled());

  const std::vector<int> wires(data.wires.begin(), data.wires.end());
  auto hop = [&](bool last) {
    auto errs = last && cfg.forced_error ? std::vector<ChannelError>{*cfg.forced_error} : sample_errors(cfg.depolarizing, rng);
    apply_channel_errors(state, wires, errs);
    res.errors.insert(res.errors.end(), errs.begin(), errs.end());
  };
  if (cfg.bob_prepares) {
    hop(false);
    steane::extract_and_correct(ex, data, anc);  // Alice's local correction before she returns the block
  }
  hop(true);
  res.syndrome = steane::extract_and_correct(ex, data, anc);

  const CodeBlock blocks[] = {data};
  const StateVector logical = steane::decode_to_logical(state, blocks);
  const StateVector ideal = plus_state<double>(cfg.theta);
  const double norm = logical.norm_squared();
  res.fidelity = norm > 0 ? std::norm(ideal.amplitudes().dot(logical.amplitudes())) / norm : 0.0;

  const auto before = ex.scheduled();
  const CodeBlock rotated = steane::apply_logical_phase(ex, data, spare, bob_phase, anc);
  steane::transversal_gate(ex, GateKind::H, rotated);
  res.bit = steane::ft_measure_z_destructive(ex, rotated, anc).bit;
  res.measure = to_cost(ex.scheduled() - before);
  return res;
}

}  // namespace bqc::protocol
