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

#include "hyperwalk/walk.hpp"

#include <algorithm>

#include "hyperwalk/error.hpp"

namespace hyperwalk {
namespace {

template <typename T>
std::size_t position_of(std::span<const T> items, T value) {
  auto it = std::find(items.begin(), items.end(), value);
  if (it == items.end()) {
    throw Error(Errc::not_incident, "oracle answers are inconsistent: id " +
                                        std::to_string(value) + " missing from neighborhood");
  }
  return static_cast<std::size_t>(it - items.begin());
}

// Uniform position among the items different from `excluded`, which must
// occur exactly once. Rejection keeps this O(1) at high-degree nodes; the
// positional fallback only runs on pathological answers.
template <typename T>
std::size_t uniform_other(Rng& rng, std::span<const T> items, T excluded) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto pick = rng.uniform_index(items.size());
    if (items[pick] != excluded) return pick;
  }
  const auto skip = position_of(items, excluded);
  auto pick = rng.uniform_index(items.size() - 1);
  return pick >= skip ? pick + 1 : pick;
}

class Walker {
 public:
  Walker(QueryOracle& oracle, WalkKind kind, Rng& rng) : oracle_(oracle), kind_(kind), rng_(rng) {}

  // Picks Y_k among `edges` and leaves its member list in members().
  EdgeId choose_hyperedge(std::span<const EdgeId> edges, bool first, EdgeId previous) {
    switch (kind_) {
      case WalkKind::higher_order:
        return fetch(edges[rng_.uniform_index(edges.size())]);
      case WalkKind::non_backtracking:
        if (first) return fetch(edges[rng_.uniform_index(edges.size())]);
        if (edges.size() == 1) return fetch(previous);
        return fetch(edges[uniform_other(rng_, edges, previous)]);
      case WalkKind::projected:
      case WalkKind::carletti:
        return choose_weighted(edges);
    }
    return 0;
  }

  std::span<const NodeId> members() const { return members_; }

 private:
  EdgeId fetch(EdgeId a) {
    members_ = oracle_.query_hyperedge(a);
    return a;
  }

  // One hyperedge query per candidate to learn its size, then a single
  // uniform draw against the cumulative weights.
  EdgeId choose_weighted(std::span<const EdgeId> edges) {
    offsets_.assign(1, 0);
    scratch_.clear();
    cumulative_.clear();
    double total = 0.0;
    for (EdgeId a : edges) {
      auto nodes = oracle_.query_hyperedge(a);
      scratch_.insert(scratch_.end(), nodes.begin(), nodes.end());
      offsets_.push_back(scratch_.size());
      total += hyperedge_weight(kind_, nodes.size());
      cumulative_.push_back(total);
    }
    const double u = rng_.uniform01() * total;
    auto chosen = static_cast<std::size_t>(
        std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
    chosen = std::min(chosen, edges.size() - 1);
    members_ = std::span<const NodeId>(scratch_).subspan(
        offsets_[chosen], offsets_[chosen + 1] - offsets_[chosen]);
    return edges[chosen];
  }

  QueryOracle& oracle_;
  WalkKind kind_;
  Rng& rng_;
  // Points into the oracle's last answer or into scratch_.
  std::span<const NodeId> members_;
  std::vector<NodeId> scratch_;
  std::vector<std::size_t> offsets_;
  std::vector<double> cumulative_;
};

}  // namespace

std::string_view to_string(WalkKind kind) noexcept {
  switch (kind) {
    case WalkKind::projected: return "p-rw";
    case WalkKind::carletti: return "c-rw";
    case WalkKind::higher_order: return "ho-rw";
    case WalkKind::non_backtracking: return "nb-ho-rw";
  }
  return "unknown";
}

WalkKind parse_walk_kind(std::string_view name) {
  for (auto kind : kAllWalkKinds) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(Errc::invalid_argument, "unknown walk '" + std::string(name) +
                                          "' (expected p-rw, c-rw, ho-rw or nb-ho-rw)");
}

void WalkConfig::validate() const {
  if (length < 1) throw Error(Errc::invalid_argument, "walk length must be at least 1");
  if (burn_in >= length) {
    throw Error(Errc::invalid_argument, "burn-in " + std::to_string(burn_in) +
                                            " must be smaller than the length " +
                                            std::to_string(length));
  }
}

double hyperedge_weight(WalkKind kind, std::size_t hyperedge_size) {
  const double excess = static_cast<double>(hyperedge_size) - 1.0;
  switch (kind) {
    case WalkKind::projected: return excess;
    case WalkKind::carletti: return excess * excess;
    case WalkKind::higher_order:
    case WalkKind::non_backtracking: return 1.0;
  }
  return 0.0;
}

std::vector<double> selection_probabilities(WalkKind kind,
                                            std::span<const std::size_t> hyperedge_sizes) {
  std::vector<double> weights;
  weights.reserve(hyperedge_sizes.size());
  double total = 0.0;
  for (auto s : hyperedge_sizes) {
    weights.push_back(hyperedge_weight(kind, s));
    total += weights.back();
  }
  for (auto& w : weights) w /= total;
  return weights;
}

double selection_probability(const Hypergraph& h, WalkKind kind, NodeId node, EdgeId hyperedge) {
  auto edges = h.hyperedges_of(node);
  auto it = std::lower_bound(edges.begin(), edges.end(), hyperedge);
  if (it == edges.end() || *it != hyperedge) {
    throw Error(Errc::not_incident, "node " + h.node_label(node) + " is not in hyperedge " +
                                        std::to_string(hyperedge));
  }
  double total = 0.0;
  for (EdgeId a : edges) total += hyperedge_weight(kind, h.size(a));
  return hyperedge_weight(kind, h.size(hyperedge)) / total;
}

SampleSequence walk_from(QueryOracle& oracle, WalkKind kind, NodeId seed, std::size_t length,
                         Rng& rng, const QueryBudget& budget) {
  BudgetedOracle counted(oracle, budget);
  Walker walker(counted, kind, rng);
  SampleSequence seq;
  seq.steps.reserve(length);

  NodeId x = seed;
  EdgeId previous = 0;
  try {
    for (std::size_t k = 0; k < length; ++k) {
      auto edges = counted.query_node(x);
      const auto degree = static_cast<std::uint32_t>(edges.size());
      EdgeId y = walker.choose_hyperedge(edges, k == 0, previous);
      auto members = walker.members();
      seq.steps.push_back({x, y, degree, static_cast<std::uint32_t>(members.size())});
      previous = y;
      if (k + 1 < length) {
        x = members[uniform_other(rng, members, x)];
      }
    }
  } catch (const Error& e) {
    if (e.code() != Errc::budget_exhausted) throw;
    seq.truncated = true;
  }
  seq.stats = counted.stats();
  return seq;
}

SampleSequence run_walk(QueryOracle& oracle, const WalkConfig& config, const QueryBudget& budget) {
  config.validate();
  auto seed = oracle.find_node(config.seed_node);
  if (!seed) throw Error(Errc::unknown_node, "seed node '" + config.seed_node + "'");
  Rng rng(config.rng_seed);
  return walk_from(oracle, config.kind, *seed, config.length, rng, budget);
}

namespace {

template <typename Same>
double repetition_rate(std::span<const Step> steps, Same same) {
  if (steps.size() < 2) {
    throw Error(Errc::sequence_too_short, "repetition rate needs at least two steps");
  }
  std::size_t repeats = 0;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    if (same(steps[k], steps[k + 1])) ++repeats;
  }
  return static_cast<double>(repeats) / static_cast<double>(steps.size() - 1);
}

}  // namespace

double hyperedge_repetition_rate(std::span<const Step> steps) {
  return repetition_rate(steps, [](const Step& a, const Step& b) { return a.hyperedge == b.hyperedge; });
}

double node_repetition_rate(std::span<const Step> steps) {
  return repetition_rate(steps, [](const Step& a, const Step& b) { return a.node == b.node; });
}

}  // namespace hyperwalk
