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

#include "bqc/protocol/audit.hpp"

#include <cmath>
#include <map>

#include <boost/math/distributions/chi_squared.hpp>

#include "bqc/errors.hpp"

namespace bqc::protocol {

std::vector<AngleSample> angle_samples(const Transcript& t) {
  std::vector<AngleSample> out;
  for (const auto& e : t.entries()) {
    if (!e.delivered) continue;
    if (const auto* a = std::get_if<AngleAnnounce>(&e.message.payload))
      out.push_back({a->site, e.secret.phi.value_or(Octant(0)), a->delta});
  }
  return out;
}

std::vector<AngleSample> collect_angle_samples(const brickwork::BrickworkLayout& layout, int runs,
                                               std::uint64_t seed) {
  std::vector<AngleSample> out;
  RunConfig cfg;
  cfg.backend = Backend::Tally;
  for (int i = 0; i < runs; ++i) {
    cfg.seed = seed + static_cast<std::uint64_t>(i);
    const auto s = angle_samples(run_bfk_basic(layout, std::nullopt, cfg).transcript);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

BlindnessReport blindness_audit(const std::vector<AngleSample>& samples, double significance,
                                std::int64_t min_per_coordinate) {
  if (!(significance > 0.0 && significance < 1.0)) throw ArgumentError("significance outside (0,1)");
  std::map<Site, CoordinateStats> by_site;
  std::array<std::array<std::int64_t, 8>, 8> joint{};
  for (const auto& s : samples) {
    auto& c = by_site[s.site];
    c.site = s.site;
    ++c.samples;
    ++c.counts[s.delta.k()];
    ++joint[s.phi.k()][s.delta.k()];
  }
  if (by_site.empty()) throw ArgumentError("no angle samples");
  for (const auto& [site, c] : by_site)
    if (c.samples < min_per_coordinate)
      throw ArgumentError("coordinate (" + std::to_string(site.column) + "," + std::to_string(site.row) + ") has " +
                          std::to_string(c.samples) + " samples, need " + std::to_string(min_per_coordinate));

  BlindnessReport rep;
  rep.samples = static_cast<std::int64_t>(samples.size());
  rep.threshold = significance / static_cast<double>(by_site.size());
  const boost::math::chi_squared dist(7);
  rep.passed = true;
  for (auto& [site, c] : by_site) {
    const double expected = double(c.samples) / 8.0;
    for (auto n : c.counts) c.chi_square += (double(n) - expected) * (double(n) - expected) / expected;
    c.p_value = boost::math::cdf(boost::math::complement(dist, c.chi_square));
    if (c.p_value <= rep.threshold) rep.passed = false;
    rep.coordinates.push_back(c);
  }

  const double n = double(rep.samples);
  std::array<double, 8> pa{}, pb{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      pa[i] += double(joint[i][j]) / n;
      pb[j] += double(joint[i][j]) / n;
    }
  int phi_values = 0;
  for (double p : pa) phi_values += p > 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (joint[i][j]) {
        const double p = double(joint[i][j]) / n;
        rep.mutual_information += p * std::log2(p / (pa[i] * pb[j]));
      }
  // first-order bias of the plug-in estimate for independent variables
  rep.mi_bias = double((phi_values - 1) * 7) / (2.0 * n * std::log(2.0));
  // G-test: 2 N ln2 MI is chi-square with (a-1)(b-1) dof under independence
  if (phi_values > 1) {
    const boost::math::chi_squared g((phi_values - 1) * 7);
    rep.independence_p_value =
        boost::math::cdf(boost::math::complement(g, 2.0 * n * std::log(2.0) * rep.mutual_information));
    if (rep.independence_p_value <= significance) rep.passed = false;
  }
  return rep;
}

}  // namespace bqc::protocol
