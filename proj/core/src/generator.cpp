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

#include "hyperwalk/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hyperwalk/error.hpp"
#include "hyperwalk/rng.hpp"

namespace hyperwalk {
namespace {

constexpr int kSizeAttempts = 100;

void validate(const GeneratorParams& p) {
  const auto& law = p.sizes;
  if (p.nodes < 2 || p.hyperedges < 1) {
    throw Error(Errc::infeasible_parameters, "need at least 2 nodes and 1 hyperedge");
  }
  if (law.min_size < 2 || law.min_size > law.max_size) {
    throw Error(Errc::infeasible_parameters, "size range must satisfy 2 <= min <= max");
  }
  if (law.max_size > p.nodes) {
    throw Error(Errc::infeasible_parameters, "hyperedges cannot be larger than the node count");
  }
  if (!law.weights.empty()) {
    if (law.weights.size() != law.max_size - law.min_size + 1) {
      throw Error(Errc::infeasible_parameters, "size weights must cover [min, max]");
    }
    if (std::any_of(law.weights.begin(), law.weights.end(), [](double w) { return w < 0; }) ||
        std::accumulate(law.weights.begin(), law.weights.end(), 0.0) <= 0.0) {
      throw Error(Errc::infeasible_parameters, "size weights must be non-negative, not all 0");
    }
  }
  if (!(p.degree_skew >= 0.0)) {
    throw Error(Errc::infeasible_parameters, "degree skew must be >= 0");
  }
  // Even all-maximal hyperedges cannot span the nodes.
  if (1 + p.hyperedges * (law.max_size - 1) < p.nodes) {
    throw Error(Errc::infeasible_parameters,
                std::to_string(p.hyperedges) + " hyperedges of size <= " +
                    std::to_string(law.max_size) + " cannot connect " + std::to_string(p.nodes) +
                    " nodes");
  }
}

std::size_t draw_size(const SizeLaw& law, Rng& rng) {
  const auto span = law.max_size - law.min_size + 1;
  if (law.weights.empty()) return law.min_size + rng.uniform_index(span);
  const double total = std::accumulate(law.weights.begin(), law.weights.end(), 0.0);
  double u = rng.uniform01() * total;
  for (std::size_t k = 0; k < span; ++k) {
    if (u < law.weights[k]) return law.min_size + k;
    u -= law.weights[k];
  }
  return law.max_size;
}

}  // namespace

Hypergraph generate_random_hypergraph(const GeneratorParams& params) {
  validate(params);
  const std::size_t n = params.nodes;
  const std::size_t m = params.hyperedges;
  Rng rng(params.seed);

  std::vector<std::size_t> sizes(m);
  bool feasible = false;
  for (int attempt = 0; attempt < kSizeAttempts && !feasible; ++attempt) {
    std::size_t capacity = 1;
    for (auto& s : sizes) {
      s = draw_size(params.sizes, rng);
      capacity += s - 1;
    }
    feasible = capacity >= n;
  }
  if (!feasible) {
    throw Error(Errc::infeasible_parameters,
                "could not draw hyperedge sizes able to cover " + std::to_string(n) + " nodes");
  }

  // cumulative[c] = total popularity of nodes 0..c-1.
  std::vector<double> cumulative(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cumulative[i + 1] = cumulative[i] + std::pow(static_cast<double>(i + 1), -params.degree_skew);
  }
  auto pick_existing = [&](std::size_t covered) {
    const double u = rng.uniform01() * cumulative[covered];
    auto it = std::upper_bound(cumulative.begin() + 1,
                               cumulative.begin() + static_cast<std::ptrdiff_t>(covered) + 1, u);
    auto index = static_cast<std::size_t>(it - cumulative.begin()) - 1;
    return std::min(index, covered - 1);
  };

  std::vector<std::vector<std::string>> edges(m);
  std::vector<std::size_t> members;
  std::size_t covered = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t s = sizes[k];
    members.clear();
    std::size_t fresh = std::min(n - covered, covered == 0 ? s : s - 1);
    // Old members, distinct, popularity-weighted. The first one anchors the
    // hyperedge to the existing component.
    std::size_t old_needed = s - fresh;
    if (old_needed > covered) {
      fresh += old_needed - covered;
      old_needed = covered;
    }
    while (members.size() < old_needed) {
      auto v = pick_existing(covered);
      if (std::find(members.begin(), members.end(), v) == members.end()) members.push_back(v);
    }
    for (std::size_t f = 0; f < fresh; ++f) members.push_back(covered + f);
    covered += fresh;

    edges[k].reserve(s);
    for (auto v : members) edges[k].push_back(std::to_string(v));
  }
  if (covered != n) {
    throw Error(Errc::infeasible_parameters, "generator covered only " + std::to_string(covered) +
                                                 " of " + std::to_string(n) + " nodes");
  }
  return Hypergraph::build(edges);
}

}  // namespace hyperwalk
