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

#include "bqc/protocol/messages.hpp"

#include <cstdio>
#include <map>
#include <set>

#include "bqc/errors.hpp"

namespace bqc::protocol {

namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

nlohmann::json site_json(Site s) { return {{"x", s.column}, {"y", s.row}}; }

nlohmann::json payload_json(const Payload& p) {
  return std::visit(Overload{
                        [](const QubitTransfer& q) {
                          auto j = site_json(q.site);
                          j["handle"] = q.handle;
                          j["qubits"] = q.physical_qubits;
                          if (q.order >= 0) j["order"] = q.order;
                          return j;
                        },
                        [](const AngleAnnounce& a) {
                          auto j = site_json(a.site);
                          j["delta"] = a.delta.k();
                          return j;
                        },
                        [](const ResultAnnounce& r) {
                          auto j = site_json(r.site);
                          j["bit"] = r.bit;
                          return j;
                        },
                        [](const SelectionReturn& s) {
                          auto j = site_json(s.site);
                          j["handle"] = s.handle;
                          j["qubits"] = s.physical_qubits;
                          return j;
                        },
                    },
                    p);
}

const std::set<std::string> kSchemaKeys{"dir", "seq", "type", "x", "y", "handle", "qubits", "order",
                                        "delta", "bit", "digest"};

Site site_of(const Payload& p) {
  return std::visit([](const auto& v) { return v.site; }, p);
}

}  // namespace

std::string_view variant_name(const Payload& p) {
  static constexpr std::string_view names[] = {"qubit_transfer", "angle", "result", "selection_return"};
  return names[p.index()];
}

std::string payload_digest(const Payload& p) {
  const std::string bytes = std::string(variant_name(p)) + payload_json(p).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json to_json(const ProtocolMessage& m) {
  nlohmann::json j;
  j["dir"] = m.direction == Direction::AliceToBob ? "A->B" : "B->A";
  j["seq"] = m.sequence;
  j["type"] = variant_name(m.payload);
  j.update(payload_json(m.payload));
  j["digest"] = payload_digest(m.payload);
  return j;
}

std::vector<ProtocolMessage> Transcript::bob_view() const {
  std::vector<ProtocolMessage> out;
  for (const auto& e : entries_)
    if (e.delivered) out.push_back(e.message);
  return out;
}

std::string Transcript::bob_jsonl() const {
  std::string out;
  for (const auto& m : bob_view()) out += to_json(m).dump() + "\n";
  return out;
}

std::string Transcript::omniscient_jsonl() const {
  std::string out;
  for (const auto& e : entries_) {
    auto j = to_json(e.message);
    nlohmann::json o;
    const auto& s = e.secret;
    if (s.theta) o["theta"] = s.theta->k();
    if (s.r) o["r"] = *s.r;
    if (s.phi) o["phi"] = s.phi->k();
    if (s.phi_prime) o["phi_prime"] = s.phi_prime->k();
    if (s.corrected_bit) o["corrected_bit"] = *s.corrected_bit;
    if (s.selected) o["selected"] = *s.selected;
    o["delivered"] = e.delivered;
    if (e.channel_errors) o["channel_errors"] = e.channel_errors;
    if (!e.flag.empty()) o["flag"] = e.flag;
    j["omniscient"] = o;
    out += j.dump() + "\n";
  }
  return out;
}

void audit_bob_view(const Transcript& t) {
  std::map<Direction, std::int64_t> last_seq;
  std::set<Site> announced;
  for (const auto& m : t.bob_view()) {
    const auto j = to_json(m);
    for (const auto& [key, value] : j.items())
      if (!kSchemaKeys.count(key)) throw ProtocolAbortError("bob view carries field `" + key + "`");
    auto it = last_seq.find(m.direction);
    if (it != last_seq.end() && m.sequence <= it->second)
      throw ProtocolAbortError("sequence numbers do not increase at " + std::to_string(m.sequence));
    last_seq[m.direction] = m.sequence;
    if (std::holds_alternative<AngleAnnounce>(m.payload)) announced.insert(site_of(m.payload));
    if (std::holds_alternative<ResultAnnounce>(m.payload) && !announced.count(site_of(m.payload)))
      throw ProtocolAbortError("result before angle at a site");
  }
}

std::vector<std::string> schema_signature(const Transcript& t) {
  std::vector<std::string> out;
  for (const auto& m : t.bob_view()) {
    auto j = to_json(m);
    std::string sig = std::string(m.direction == Direction::AliceToBob ? ">" : "<") + std::string(variant_name(m.payload));
    for (const auto& [key, value] : j.items())
      if (key != "digest" && key != "seq") sig += " " + key;
    out.push_back(sig);
  }
  return out;
}

}  // namespace bqc::protocol
