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

#include <deque>

#include "bqc/errors.hpp"

namespace bqc::protocol {

using brickwork::BrickworkLayout;
using brickwork::LazyBrickwork;
using brickwork::MeasurementRecord;

namespace {

enum class Kind { Bfk, Protocol1, Protocol2 };

ledger::Protocol ledger_protocol(Kind k) {
  switch (k) {
    case Kind::Bfk: return ledger::Protocol::BfkBasic;
    case Kind::Protocol1: return ledger::Protocol::Protocol1;
    case Kind::Protocol2: return ledger::Protocol::Protocol2;
  }
  return ledger::Protocol::BfkBasic;
}

Rng stream(std::uint64_t seed, std::uint32_t id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), id};
  return Rng(seq);
}

std::vector<Site> every_site(const BrickworkLayout& g) {
  std::vector<Site> out;
  for (int c = 1; c <= g.columns(); ++c)
    for (int r = 1; r <= g.rows(); ++r) out.push_back({c, r});
  return out;
}

// What travels on the quantum channel, addressed by handle. Nature also
// lives here: in the tally backend it decides outcomes, and a measurement
// rotated by pi (r = 1) reads the complementary bit.
struct Medium {
  enum class Carrier { Qubit, InputWire, OutputWire };
  struct Slot {
    Carrier carrier = Carrier::Qubit;
    LazyBrickwork::Payload payload{};
    int wire = 0;
    int errors = 0;  // channel errors since the last correction (encoded protocols)
  };

  Backend backend = Backend::Exact;
  int block = 1;
  std::map<std::int64_t, Slot> slots;
  std::optional<StateVector> input;
  std::optional<StateVector> output;
  std::int64_t next_handle = 1;
  const std::map<Site, int>* flips = nullptr;
  Rng nature;

  std::int64_t add(Slot s) {
    slots[next_handle] = s;
    return next_handle++;
  }
  Slot take(std::int64_t h) {
    auto it = slots.find(h);
    if (it == slots.end()) throw ProtocolAbortError("unknown payload handle " + std::to_string(h));
    Slot s = it->second;
    slots.erase(it);
    return s;
  }
  int tally_outcome(Site s) { return uniform_int(nature, 0, 1) ^ flips->at(s); }

  void apply(std::int64_t handle, const std::vector<ChannelError>& errors) {
    auto& slot = slots.at(handle);
    if (block > 1) {
      slot.errors += static_cast<int>(errors.size());
      return;
    }
    if (backend == Backend::Tally) return;
    for (const auto& e : errors) {
      switch (slot.carrier) {
        case Carrier::Qubit: {
          auto q = qubit_state<double>(slot.payload[0], slot.payload[1]);
          inject_pauli(q, 0, e.pauli);
          slot.payload = {q[0], q[1]};
          break;
        }
        case Carrier::InputWire: inject_pauli(*input, slot.wire, e.pauli); break;
        case Carrier::OutputWire: inject_pauli(*output, slot.wire, e.pauli); break;
      }
    }
  }

  // Receiver-side syndrome correction of an encoded block: one error is
  // fixed, two or more are not.
  std::string correct(std::int64_t handle) {
    auto& slot = slots.at(handle);
    const int e = slot.errors;
    slot.errors = 0;
    if (e >= 2) {
      ++uncorrectable;
      return "uncorrectable: " + std::to_string(e) + " channel errors on one block";
    }
    if (e == 1) ++corrected;
    return e == 1 ? "corrected" : "";
  }

  std::int64_t corrected = 0;
  std::int64_t uncorrectable = 0;
};

struct Outgoing {
  Payload payload;
  SecretNote secret;
};

struct Reply {
  std::vector<Outgoing> out;
  SecretNote note;  // annotation for the received message
  std::string flag;
};

class Alice {
 public:
  Alice(Kind kind, const BrickworkLayout& layout, const RunConfig& cfg, Medium& medium,
        const std::optional<StateVector>& input)
      : kind_(kind),
        layout_(layout),
        cfg_(cfg),
        medium_(medium),
        input_(input),
        rng_(stream(cfg.seed, 1)),
        all_(every_site(layout)),
        order_(layout.measurement_order()) {
    for (const auto& s : all_) theta_[s] = s.column == layout.output_column() ? Octant(0) : Octant(uniform_int(rng_, 0, 7));
    medium_.flips = &r_;
  }

  std::vector<Outgoing> start() {
    std::vector<Outgoing> out;
    if (kind_ == Kind::Protocol2) return out;
    if (input_) {
      StateVector enc = *input_;
      for (int r = 1; r <= layout_.rows(); ++r) apply_gate(enc, Gate::rz(theta_[{1, r}], r - 1));
      medium_.input = std::move(enc);
    }
    for (const auto& s : all_) {
      Medium::Slot slot;
      if (s.column == 1 && input_) {
        slot.carrier = Medium::Carrier::InputWire;
        slot.wire = s.row - 1;
      } else if (medium_.backend == Backend::Exact) {
        slot.payload = brickwork::plus_payload(theta_[s]);
      }
      ++prep_hist[theta_[s].k()];
      SecretNote note;
      note.theta = theta_[s];
      out.push_back({QubitTransfer{s, medium_.add(slot), medium_.block, -1}, note});
    }
    out.push_back(announce());
    return out;
  }

  Reply receive(const Payload& p) {
    Reply reply;
    if (const auto* q = std::get_if<QubitTransfer>(&p)) {
      if (q->order < 0) {
        ++outputs_;
        return reply;
      }
      select(*q, reply);
      return reply;
    }
    if (const auto* res = std::get_if<ResultAnnounce>(&p)) {
      if (next_ == 0 || order_[next_ - 1] != res->site) throw ProtocolAbortError("result for a site not announced");
      const int s = res->bit ^ r_.at(res->site);
      corrected_[res->site] = s;
      reply.note.corrected_bit = s;
      if (next_ < order_.size()) reply.out.push_back(announce());
      return reply;
    }
    throw ProtocolAbortError("alice received an unexpected " + std::string(variant_name(p)));
  }

  bool finished() const { return next_ == order_.size() && outputs_ == layout_.rows(); }
  const MeasurementRecord& corrected() const { return corrected_; }

  StateVector output() const {
    StateVector out = *medium_.output;
    const int c = layout_.output_column();
    for (int r = 1; r <= layout_.rows(); ++r) {
      if (brickwork::parity(corrected_, layout_.x_dependencies({c, r}))) apply_gate(out, Gate::one(GateKind::X, r - 1));
      if (brickwork::parity(corrected_, layout_.z_dependencies({c, r}))) apply_gate(out, Gate::one(GateKind::Z, r - 1));
    }
    return out;
  }

  ledger::OctantCounts prep_hist{};
  int held = 0;
  int high_water = 0;

 private:
  Outgoing announce() {
    const Site s = order_[next_++];
    const Octant phi_prime = brickwork::flow_angle(layout_, s, corrected_);
    // the draw happens even when r is pinned, so paired runs stay aligned
    int r = uniform_int(rng_, 0, 1);
    if (auto it = cfg_.forced_r.find(s); it != cfg_.forced_r.end()) r = it->second & 1;
    r_[s] = r;
    SecretNote note;
    note.theta = theta_[s];
    note.r = r;
    note.phi = layout_.angle(s);
    note.phi_prime = phi_prime;
    return {AngleAnnounce{s, phi_prime + theta_[s] + Octant(4 * r)}, note};
  }

  // One block of a preparation batch arrived from Bob.
  void select(const QubitTransfer& q, Reply& reply) {
    const bool chosen = q.order == theta_.at(q.site).k();
    high_water = std::max(high_water, ++held);
    if (chosen) {
      chosen_ = q.handle;
      reply.flag = medium_.correct(q.handle);
    } else if (cfg_.buffer_mode == BufferMode::MeasureAndDiscard) {
      medium_.take(q.handle);
      --held;
    } else {
      pending_.push_back(q.handle);
    }
    if (q.order != 7) return;
    for (auto h : pending_) medium_.take(h);
    pending_.clear();
    held = 0;
    // fresh handle, so the returned block cannot be matched to its order
    const auto slot = medium_.take(chosen_);
    SecretNote note;
    note.theta = theta_.at(q.site);
    note.selected = theta_.at(q.site).k();
    reply.out.push_back({SelectionReturn{q.site, medium_.add(slot), medium_.block}, note});
    if (++returned_ == all_.size()) reply.out.push_back(announce());
  }

  Kind kind_;
  const BrickworkLayout& layout_;
  const RunConfig& cfg_;
  Medium& medium_;
  const std::optional<StateVector>& input_;
  Rng rng_;
  std::vector<Site> all_;
  std::vector<Site> order_;
  std::map<Site, Octant> theta_;
  std::map<Site, int> r_;
  MeasurementRecord corrected_;
  std::size_t next_ = 0;
  std::size_t returned_ = 0;
  int outputs_ = 0;
  std::int64_t chosen_ = 0;
  std::vector<std::int64_t> pending_;
};

// Bob knows only the grid size, never the angles.
class Bob {
 public:
  Bob(Kind kind, int rows, int layers, Medium& medium, std::uint64_t seed)
      : kind_(kind), grid_(rows, layers), medium_(medium), rng_(stream(seed, 4)) {
    if (medium_.backend == Backend::Exact) engine_.emplace(rows, layers, rng_);
    last_ = grid_.measurement_order().back();
  }

  std::vector<Outgoing> start() {
    std::vector<Outgoing> out;
    if (kind_ != Kind::Protocol2) return out;
    for (const auto& s : every_site(grid_))
      for (int k = 0; k < 8; ++k) {
        Medium::Slot slot;
        if (medium_.backend == Backend::Exact) slot.payload = brickwork::plus_payload(Octant(k));
        ++prep_hist[k];
        out.push_back({QubitTransfer{s, medium_.add(slot), medium_.block, k}, {}});
      }
    return out;
  }

  Reply receive(const Payload& p) {
    Reply reply;
    if (const auto* q = std::get_if<QubitTransfer>(&p)) {
      store(q->site, q->handle);
    } else if (const auto* sel = std::get_if<SelectionReturn>(&p)) {
      store(sel->site, sel->handle);
    } else if (const auto* a = std::get_if<AngleAnnounce>(&p)) {
      const int bit = engine_ ? engine_->measure(a->site, a->delta) : medium_.tally_outcome(a->site);
      ++measured;
      ++measured_hist[(-a->delta).k()];
      reply.out.push_back({ResultAnnounce{a->site, bit}, {}});
      if (a->site == last_) return_outputs(reply);
    } else {
      throw ProtocolAbortError("bob received an unexpected " + std::string(variant_name(p)));
    }
    return reply;
  }

  ledger::OctantCounts prep_hist{};
  ledger::OctantCounts measured_hist{};
  std::int64_t received = 0;
  std::int64_t measured = 0;

 private:
  void store(Site s, std::int64_t handle) {
    ++received;
    const auto slot = medium_.take(handle);
    if (!engine_) return;
    if (slot.carrier == Medium::Carrier::InputWire) {
      if (++input_rows_ == grid_.rows()) engine_->set_input(*medium_.input);
      return;
    }
    engine_->set_payload(s, slot.payload);
  }

  void return_outputs(Reply& reply) {
    if (engine_) medium_.output = engine_->output();
    for (int r = 1; r <= grid_.rows(); ++r) {
      Medium::Slot slot;
      slot.carrier = Medium::Carrier::OutputWire;
      slot.wire = r - 1;
      reply.out.push_back({QubitTransfer{{grid_.output_column(), r}, medium_.add(slot), medium_.block, -1}, {}});
    }
  }

  Kind kind_;
  BrickworkLayout grid_;
  Medium& medium_;
  Rng rng_;
  std::optional<LazyBrickwork> engine_;
  Site last_;
  int input_rows_ = 0;
};

class Scheduler {
 public:
  Scheduler(const RunConfig& cfg, Medium& medium, RunResult& result)
      : cfg_(cfg), medium_(medium), result_(result), rng_(stream(cfg.seed, 2)) {}

  void post(Direction d, std::vector<Outgoing> batch) {
    for (auto& o : batch) queue_.push_back({ProtocolMessage{d, next_seq_[static_cast<int>(d)]++, std::move(o.payload)}, o.secret});
  }

  void run(Alice& alice, Bob& bob) {
    while (!queue_.empty()) {
      auto [msg, secret] = std::move(queue_.front());
      queue_.pop_front();
      Delivery d;
      for (int attempt = 0;; ++attempt) {
        d = step_channel(cfg_.channel, msg, rng_);
        if (d.delivered) break;
        log(msg, secret, false, {}, {});
        ++result_.retransmissions;
        if (attempt >= cfg_.channel.max_retransmits)
          throw ProtocolAbortError("classical message lost " + std::to_string(attempt + 1) + " times");
      }
      std::string flag;
      if (const int n = physical_qubits(msg.payload); n > 0) {
        const auto handle = std::visit(
            [](const auto& v) -> std::int64_t {
              if constexpr (requires { v.handle; }) return v.handle;
              return 0;
            },
            msg.payload);
        const auto* q = std::get_if<QubitTransfer>(&msg.payload);
        (q && q->order < 0 && msg.direction == Direction::BobToAlice ? result_.resources.returned
                                                                     : result_.resources.transmitted) += n;
        result_.resources.channel_errors += static_cast<std::int64_t>(d.errors.size());
        medium_.apply(handle, d.errors);
        // batch blocks are corrected by Alice only if she keeps them
        const bool batch = q && q->order >= 0;
        if (medium_.block > 1 && !batch) flag = medium_.correct(handle);
      }
      ++result_.messages;
      const std::size_t at = log(msg, secret, true, d, flag);
      Reply reply = msg.direction == Direction::AliceToBob ? bob.receive(msg.payload) : alice.receive(msg.payload);
      if (at != kNone) {
        if (reply.note.corrected_bit) entries_[at].secret.corrected_bit = reply.note.corrected_bit;
        if (!reply.flag.empty()) entries_[at].flag = reply.flag;
      }
      post(msg.direction == Direction::AliceToBob ? Direction::BobToAlice : Direction::AliceToBob, std::move(reply.out));
    }
    for (auto& e : entries_) result_.transcript.add(std::move(e));
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t log(const ProtocolMessage& m, const SecretNote& s, bool delivered, const Delivery& d,
                  const std::string& flag) {
    if (!cfg_.keep_transcript) return kNone;
    entries_.push_back({m, s, delivered, static_cast<std::int64_t>(d.errors.size()), flag});
    return entries_.size() - 1;
  }

  const RunConfig& cfg_;
  Medium& medium_;
  RunResult& result_;
  Rng rng_;
  std::deque<std::pair<ProtocolMessage, SecretNote>> queue_;
  std::int64_t next_seq_[2] = {0, 0};
  std::vector<TranscriptEntry> entries_;
};

RunResult run(Kind kind, const BrickworkLayout& layout, const std::optional<StateVector>& input, const RunConfig& cfg) {
  cfg.channel.validate();
  if (input) {
    if (kind == Kind::Protocol2) throw ArgumentError("alice runs no gates in protocol 2, so column 1 starts in |+>");
    if (cfg.backend == Backend::Tally) throw ArgumentError("the tally backend carries no input state");
    if (input->num_qubits() != layout.rows()) throw ArgumentError("input state size differs from the row count");
  }
  if (cfg.backend == Backend::Exact && 2 * layout.rows() > kDefaultQubitCap)
    throw ResourceLimitError("exact backend needs " + std::to_string(2 * layout.rows()) + " live qubits, cap is " +
                             std::to_string(kDefaultQubitCap));

  RunResult result;
  Medium medium;
  medium.backend = cfg.backend;
  medium.block = kind == Kind::Bfk ? 1 : steane::kBlockSize;
  medium.nature = stream(cfg.seed, 3);

  Alice alice(kind, layout, cfg, medium, input);
  Bob bob(kind, layout.rows(), layout.layers(), medium, cfg.seed);
  Scheduler scheduler(cfg, medium, result);
  scheduler.post(Direction::AliceToBob, alice.start());
  scheduler.post(Direction::BobToAlice, bob.start());
  scheduler.run(alice, bob);
  if (!alice.finished()) throw ProtocolAbortError("protocol stopped before every site was measured");
  if (cfg.keep_transcript) audit_bob_view(result.transcript);

  result.corrected = alice.corrected();
  if (cfg.backend == Backend::Exact) result.output = alice.output();

  auto& res = result.resources;
  res.census = layout.census();
  res.census.qubits = bob.received;
  res.census.measured = bob.measured;
  const auto p = ledger_protocol(kind);
  res.expected = ledger::estimate(p, {res.census, std::nullopt});
  const auto& prep = kind == Kind::Protocol2 ? bob.prep_hist : alice.prep_hist;
  res.realized = ledger::estimate_per_octant(p, res.census, kind == Kind::Bfk ? ledger::OctantCounts{} : prep,
                                             bob.measured_hist);
  res.buffer_high_water = alice.high_water;
  res.corrected_blocks = medium.corrected;
  res.uncorrectable_blocks = medium.uncorrectable;
  if (res.uncorrectable_blocks > 0) {
    result.failed = true;
    result.flags.push_back(std::to_string(res.uncorrectable_blocks) + " block(s) took two or more channel errors");
  }
  return result;
}

}  // namespace

std::string_view backend_name(Backend b) noexcept { return b == Backend::Exact ? "exact" : "tally"; }

std::string_view buffer_mode_name(BufferMode m) noexcept {
  return m == BufferMode::EightQubit ? "eight-qubit" : "measure-and-discard";
}

RunConfig run_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "config must be a JSON object");
  RunConfig cfg;
  try {
    if (j.contains("backend")) {
      const auto b = j.at("backend").get<std::string>();
      if (b == "exact")
        cfg.backend = Backend::Exact;
      else if (b == "tally")
        cfg.backend = Backend::Tally;
      else
        throw ArgumentError("unknown backend `" + b + "`");
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("buffer_mode")) {
      const auto m = j.at("buffer_mode").get<std::string>();
      if (m == buffer_mode_name(BufferMode::EightQubit))
        cfg.buffer_mode = BufferMode::EightQubit;
      else if (m == buffer_mode_name(BufferMode::MeasureAndDiscard))
        cfg.buffer_mode = BufferMode::MeasureAndDiscard;
      else
        throw ArgumentError("unknown buffer_mode `" + m + "`");
    }
    if (j.contains("channel")) {
      const auto& c = j.at("channel");
      if (c.contains("depolarizing")) cfg.channel.depolarizing = c.at("depolarizing").get<double>();
      if (c.contains("loss")) cfg.channel.loss = c.at("loss").get<double>();
      if (c.contains("max_retransmits")) cfg.channel.max_retransmits = c.at("max_retransmits").get<int>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("config: ") + e.what());
  }
  cfg.channel.validate();
  return cfg;
}

std::string run_config_to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["backend"] = backend_name(cfg.backend);
  j["seed"] = cfg.seed;
  j["buffer_mode"] = buffer_mode_name(cfg.buffer_mode);
  j["channel"] = {{"depolarizing", cfg.channel.depolarizing},
                  {"loss", cfg.channel.loss},
                  {"max_retransmits", cfg.channel.max_retransmits}};
  return j.dump(2);
}

RunResult run_bfk_basic(const BrickworkLayout& layout, const std::optional<StateVector>& input, const RunConfig& cfg) {
  return run(Kind::Bfk, layout, input, cfg);
}

RunResult run_protocol1(const BrickworkLayout& layout, const std::optional<StateVector>& input, const RunConfig& cfg) {
  return run(Kind::Protocol1, layout, input, cfg);
}

RunResult run_protocol2_bsa(const BrickworkLayout& layout, const std::optional<StateVector>& input,
                            const RunConfig& cfg) {
  return run(Kind::Protocol2, layout, input, cfg);
}

}  // namespace bqc::protocol
