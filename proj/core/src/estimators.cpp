// Copyright 2026 The hyperwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperwalk/estimators.hpp"

#include "hyperwalk/error.hpp"

namespace hyperwalk {
namespace features {

NodeFeature degree() {
  return [](NodeId, std::size_t d) { return static_cast<double>(d); };
}
NodeFeature degree_equals(std::size_t value) {
  return [value](NodeId, std::size_t d) { return d == value ? 1.0 : 0.0; };
}
NodeFeature degree_at_least(std::size_t value) {
  return [value](NodeId, std::size_t d) { return d >= value ? 1.0 : 0.0; };
}
NodeFeature constant_node(double c) {
  return [c](NodeId, std::size_t) { return c; };
}
HyperedgeFeature size() {
  return [](EdgeId, std::size_t s) { return static_cast<double>(s); };
}
HyperedgeFeature size_equals(std::size_t value) {
  return [value](EdgeId, std::size_t s) { return s == value ? 1.0 : 0.0; };
}
HyperedgeFeature size_at_least(std::size_t value) {
  return [value](EdgeId, std::size_t s) { return s >= value ? 1.0 : 0.0; };
}
HyperedgeFeature constant_hyperedge(double c) {
  return [c](EdgeId, std::size_t) { return c; };
}

}  // namespace features

namespace {

std::span<const Step> after_burn_in(std::span<const Step> steps, std::size_t burn_in) {
  if (burn_in >= steps.size()) {
    throw Error(Errc::empty_sample, "no samples left after discarding " +
                                        std::to_string(burn_in) + " of " +
                                        std::to_string(steps.size()));
  }
  return steps.subspan(burn_in);
}

// Shared Phi/Psi accumulation. `project` maps a step to (id, weight base),
// where the weight is 1 / degree or 1 / size.
template <typename Project, typename Feature, typename Predicate>
EstimateReport ratio_estimate(std::span<const Step> steps, std::size_t burn_in, Project project,
                              const Feature& f, const Predicate& in_subset) {
  auto kept = after_burn_in(steps, burn_in);
  double phi = 0.0;
  double psi = 0.0;
  for (const auto& step : kept) {
    auto [id, count] = project(step);
    if (!in_subset(id, count)) continue;
    const double w = 1.0 / static_cast<double>(count);
    phi += f(id, count) * w;
    psi += w;
  }
  const auto r = static_cast<double>(kept.size());
  EstimateReport report;
  report.phi = phi / r;
  report.psi = psi / r;
  report.samples = kept.size();
  report.burn_in = burn_in;
  if (!(psi > 0.0)) {
    throw Error(Errc::zero_denominator, "no sampled element falls in the requested subset");
  }
  report.estimate = phi / psi;
  return report;
}

auto node_of = [](const Step& s) { return std::pair<std::uint32_t, std::size_t>{s.node, s.degree}; };
auto hyperedge_of = [](const Step& s) {
  return std::pair<std::uint32_t, std::size_t>{s.hyperedge, s.size};
};
auto everything = [](std::uint32_t, std::size_t) { return true; };

}  // namespace

EstimateReport estimate_node(std::span<const Step> steps, const NodeFeature& f,
                             std::size_t burn_in) {
  return ratio_estimate(steps, burn_in, node_of, f, everything);
}

EstimateReport estimate_node_subset(std::span<const Step> steps, const NodeFeature& f,
                                    const NodePredicate& in_subset, std::size_t burn_in) {
  return ratio_estimate(steps, burn_in, node_of, f, in_subset);
}

EstimateReport estimate_hyperedge(std::span<const Step> steps, const HyperedgeFeature& f,
                                  std::size_t burn_in) {
  return ratio_estimate(steps, burn_in, hyperedge_of, f, everything);
}

EstimateReport estimate_hyperedge_subset(std::span<const Step> steps, const HyperedgeFeature& f,
                                         const HyperedgePredicate& in_subset,
                                         std::size_t burn_in) {
  return ratio_estimate(steps, burn_in, hyperedge_of, f, in_subset);
}

Distribution estimate_distribution(std::span<const Step> steps, DistributionKind kind,
                                   DistributionMode mode, std::size_t burn_in) {
  auto kept = after_burn_in(steps, burn_in);
  // Per-value sums of 1/value; each value's indicator estimate is its
  // share of the total.
  Distribution mass;
  for (const auto& step : kept) {
    const std::size_t value = kind == DistributionKind::degree ? step.degree : step.size;
    mass[value] += 1.0 / static_cast<double>(value);
  }
  Distribution out;
  if (mode == DistributionMode::pmf) {
    double total = 0.0;
    for (const auto& [value, m] : mass) total += m;
    for (const auto& [value, m] : mass) out[value] = m / total;
    return out;
  }
  // Suffix sums; the last one computed (smallest value) is the total.
  double tail = 0.0;
  for (auto it = mass.rbegin(); it != mass.rend(); ++it) {
    tail += it->second;
    out[it->first] = tail;
  }
  for (auto& [value, p] : out) p /= tail;
  return out;
}

std::map<std::string, double> estimate_composition(
    std::span<const Step> steps, DistributionKind kind, const CategoryLookup& category,
    const std::function<bool(std::uint32_t id)>& in_subset, std::size_t burn_in) {
  auto kept = after_burn_in(steps, burn_in);
  std::map<std::string, double> mass;
  double total = 0.0;
  for (const auto& step : kept) {
    auto [id, count] = kind == DistributionKind::degree ? node_of(step) : hyperedge_of(step);
    if (in_subset && !in_subset(id)) continue;
    auto label = category(id);
    if (!label) {
      throw Error(Errc::missing_category,
                  std::string(kind == DistributionKind::degree ? "node" : "hyperedge") + " id " +
                      std::to_string(id) + " has no category");
    }
    const double w = 1.0 / static_cast<double>(count);
    mass[*label] += w;
    total += w;
  }
  if (!(total > 0.0)) {
    throw Error(Errc::zero_denominator, "no sampled element falls in the requested subset");
  }
  for (auto& [label, m] : mass) m /= total;
  return mass;
}

}  // namespace hyperwalk
