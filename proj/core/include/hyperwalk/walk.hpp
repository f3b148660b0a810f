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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/oracle.hpp"
#include "hyperwalk/rng.hpp"

namespace hyperwalk {

enum class WalkKind {
  projected,         // P-RW: hyperedge weight (s - 1)
  carletti,          // C-RW: hyperedge weight (s - 1)^2
  higher_order,      // HO-RW: uniform over incident hyperedges
  non_backtracking,  // NB-HO-RW: HO-RW that avoids the previous hyperedge
};

inline constexpr std::array<WalkKind, 4> kAllWalkKinds = {
    WalkKind::projected, WalkKind::carletti, WalkKind::higher_order, WalkKind::non_backtracking};

/// "p-rw", "c-rw", "ho-rw", "nb-ho-rw".
std::string_view to_string(WalkKind kind) noexcept;
WalkKind parse_walk_kind(std::string_view name);

struct WalkConfig {
  WalkKind kind = WalkKind::non_backtracking;
  std::size_t length = 0;
  std::string seed_node;
  std::uint64_t rng_seed = 0;
  // Carried for the estimators; the walk itself ignores it.
  std::size_t burn_in = 0;

  /// Throws InvalidArgument unless length >= 1 and burn_in < length.
  void validate() const;
};

/// One (X_k, Y_k) pair plus the degree of X_k and size of Y_k observed while
/// walking, so estimation needs no further queries.
struct Step {
  NodeId node;
  EdgeId hyperedge;
  std::uint32_t degree;
  std::uint32_t size;

  friend bool operator==(const Step&, const Step&) = default;
};

struct SampleSequence {
  std::vector<Step> steps;
  QueryStats stats;
  // Set when a query budget ended the walk early.
  bool truncated = false;
};

/// Unnormalized weight of a hyperedge of the given size for `kind`.
double hyperedge_weight(WalkKind kind, std::size_t hyperedge_size);

/// Selection probabilities over a node's incident hyperedges, given their
/// sizes in order. NB-HO-RW returns the HO-RW law (its first step).
std::vector<double> selection_probabilities(WalkKind kind,
                                            std::span<const std::size_t> hyperedge_sizes);

/// S_{i,a} evaluated on a full hypergraph. Throws NotIncident.
double selection_probability(const Hypergraph& h, WalkKind kind, NodeId node, EdgeId hyperedge);

/// Runs a walk of `length` steps from `seed`. Neighborhoods come only from
/// `oracle`; the returned stats count this walk's queries alone. If the
/// budget runs out mid-step that step is discarded and the result is
/// flagged truncated.
SampleSequence walk_from(QueryOracle& oracle, WalkKind kind, NodeId seed, std::size_t length,
                         Rng& rng, const QueryBudget& budget = {});

/// Resolves config.seed_node through the oracle and walks with a generator
/// seeded from config.rng_seed. Throws UnknownNode for an unknown seed.
SampleSequence run_walk(QueryOracle& oracle, const WalkConfig& config,
                        const QueryBudget& budget = {});

/// Fraction of k in [1, r-1] with Y_k == Y_{k+1}. Throws SequenceTooShort.
double hyperedge_repetition_rate(std::span<const Step> steps);
/// Same for X_k == X_{k+1}.
double node_repetition_rate(std::span<const Step> steps);

}  // namespace hyperwalk
