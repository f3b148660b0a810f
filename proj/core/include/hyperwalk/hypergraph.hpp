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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hyperwalk {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Immutable node/hyperedge incidence structure.
///
/// Nodes and hyperedges are densely indexed. Both incidence directions are
/// stored in compressed-row form and every list is sorted ascending, so
/// `hyperedges_of(i)` and `members(a)` are the two neighborhood answers a
/// query oracle hands out. External labels are kept for reporting.
class Hypergraph {
 public:
  /// Builds from hyperedges given as lists of node labels. Node labels are
  /// densified in first-appearance order. Hyperedge labels default to the
  /// zero-based input position.
  ///
  /// Throws Error with EmptyInput, HyperedgeTooSmall or DuplicateMember.
  static Hypergraph build(std::span<const std::vector<std::string>> hyperedges,
                          std::vector<std::string> hyperedge_labels = {});

  /// Convenience overload for integer labels.
  static Hypergraph build(std::span<const std::vector<std::int64_t>> hyperedges);
  static Hypergraph build(std::initializer_list<std::vector<std::int64_t>> hyperedges);

  std::size_t node_count() const noexcept { return node_labels_.size(); }
  std::size_t hyperedge_count() const noexcept { return edge_labels_.size(); }
  /// Number of incident (node, hyperedge) pairs; equals both the degree sum
  /// and the size sum.
  std::size_t incidence_count() const noexcept { return node_edges_.size(); }

  std::size_t degree(NodeId node) const;
  std::size_t size(EdgeId hyperedge) const;

  std::span<const EdgeId> hyperedges_of(NodeId node) const;
  std::span<const NodeId> members(EdgeId hyperedge) const;

  bool contains(NodeId node, EdgeId hyperedge) const;

  const std::string& node_label(NodeId node) const;
  const std::string& hyperedge_label(EdgeId hyperedge) const;
  std::optional<NodeId> find_node(std::string_view label) const;
  std::optional<EdgeId> find_hyperedge(std::string_view label) const;

 private:
  Hypergraph() = default;

  std::vector<std::size_t> node_offsets_;
  std::vector<EdgeId> node_edges_;
  std::vector<std::size_t> edge_offsets_;
  std::vector<NodeId> edge_members_;
  std::vector<std::string> node_labels_;
  std::vector<std::string> edge_labels_;
  std::unordered_map<std::string, NodeId> node_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// Component id for every node in the bipartite incidence graph. Ids are
/// assigned in order of the smallest node index they contain.
std::vector<std::uint32_t> connected_components(const Hypergraph& h);

/// True iff every node is reachable from node 0 by traversing hyperedges.
bool is_connected(const Hypergraph& h);

/// Sub-hypergraph on the largest component, re-densified. Ties go to the
/// component holding the smallest original node index. Labels are kept.
Hypergraph largest_connected_component(const Hypergraph& h);

}  // namespace hyperwalk
