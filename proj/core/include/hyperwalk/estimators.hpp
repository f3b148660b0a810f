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

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "hyperwalk/walk.hpp"

namespace hyperwalk {

/// f_v: evaluated with the node id and its degree as observed on the walk.
using NodeFeature = std::function<double(NodeId node, std::size_t degree)>;
/// f_e: evaluated with the hyperedge id and its size as observed on the walk.
using HyperedgeFeature = std::function<double(EdgeId hyperedge, std::size_t size)>;

/// Membership in V' (resp. E').
using NodePredicate = std::function<bool(NodeId node, std::size_t degree)>;
using HyperedgePredicate = std::function<bool(EdgeId hyperedge, std::size_t size)>;

namespace features {
NodeFeature degree();
NodeFeature degree_equals(std::size_t d);
NodeFeature degree_at_least(std::size_t d);
NodeFeature constant_node(double c);
HyperedgeFeature size();
HyperedgeFeature size_equals(std::size_t s);
HyperedgeFeature size_at_least(std::size_t s);
HyperedgeFeature constant_hyperedge(double c);
}  // namespace features

/// Ratio estimate Phi / Psi with the accumulators kept for inspection.
/// Phi and Psi are averaged over the post-burn-in sample count.
struct EstimateReport {
  double estimate = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  std::size_t samples = 0;
  std::size_t burn_in = 0;
};

// All estimators discard the first `burn_in` steps. They throw EmptySample
// when nothing is left and ZeroDenominator when Psi is 0.

EstimateReport estimate_node(std::span<const Step> steps, const NodeFeature& f,
                             std::size_t burn_in = 0);
EstimateReport estimate_node_subset(std::span<const Step> steps, const NodeFeature& f,
                                    const NodePredicate& in_subset, std::size_t burn_in = 0);
EstimateReport estimate_hyperedge(std::span<const Step> steps, const HyperedgeFeature& f,
                                  std::size_t burn_in = 0);
EstimateReport estimate_hyperedge_subset(std::span<const Step> steps, const HyperedgeFeature& f,
                                         const HyperedgePredicate& in_subset,
                                         std::size_t burn_in = 0);

enum class DistributionKind { degree, size };
enum class DistributionMode { pmf, ccdf };

using Distribution = std::map<std::size_t, double>;

/// Degree or size distribution over the observed support. All points share
/// one denominator, so a pmf sums to 1 up to rounding and a ccdf is exactly
/// 1 at the smallest observed value.
Distribution estimate_distribution(std::span<const Step> steps, DistributionKind kind,
                                   DistributionMode mode, std::size_t burn_in = 0);

/// Category of an id, or nullopt when the caller has none for it.
using CategoryLookup = std::function<std::optional<std::string>(std::uint32_t id)>;

/// Estimated share of each category among nodes (kind == degree) or
/// hyperedges (kind == size), optionally restricted to a subset.
/// Throws MissingCategory when a sampled id has no category.
std::map<std::string, double> estimate_composition(
    std::span<const Step> steps, DistributionKind kind, const CategoryLookup& category,
    const std::function<bool(std::uint32_t id)>& in_subset = {}, std::size_t burn_in = 0);

}  // namespace hyperwalk
