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

#include "hyperwalk/hypergraph.hpp"

#include <algorithm>
#include <numeric>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

Hypergraph Hypergraph::build(std::span<const std::vector<std::string>> hyperedges,
                             std::vector<std::string> hyperedge_labels) {
  if (hyperedges.empty()) {
    throw Error(Errc::empty_input, "no hyperedges given");
  }
  if (!hyperedge_labels.empty() && hyperedge_labels.size() != hyperedges.size()) {
    throw Error(Errc::invalid_argument, "hyperedge label count does not match hyperedge count");
  }

  Hypergraph h;
  const std::size_t m = hyperedges.size();
  h.edge_offsets_.reserve(m + 1);
  h.edge_offsets_.push_back(0);

  std::vector<NodeId> scratch;
  for (std::size_t a = 0; a < m; ++a) {
    const auto& labels = hyperedges[a];
    if (labels.size() < 2) {
      throw Error(Errc::hyperedge_too_small,
                  "hyperedge " + std::to_string(a) + " has " + std::to_string(labels.size()) +
                      " member(s)");
    }
    scratch.clear();
    for (const auto& label : labels) {
      auto [it, inserted] =
          h.node_index_.try_emplace(label, static_cast<NodeId>(h.node_labels_.size()));
      if (inserted) h.node_labels_.push_back(label);
      scratch.push_back(it->second);
    }
    std::sort(scratch.begin(), scratch.end());
    auto dup = std::adjacent_find(scratch.begin(), scratch.end());
    if (dup != scratch.end()) {
      throw Error(Errc::duplicate_member, "hyperedge " + std::to_string(a) + " lists node '" +
                                              h.node_labels_[*dup] + "' twice");
    }
    h.edge_members_.insert(h.edge_members_.end(), scratch.begin(), scratch.end());
    h.edge_offsets_.push_back(h.edge_members_.size());
  }

  if (hyperedge_labels.empty()) {
    hyperedge_labels.reserve(m);
    for (std::size_t a = 0; a < m; ++a) hyperedge_labels.push_back(std::to_string(a));
  }
  h.edge_labels_ = std::move(hyperedge_labels);
  for (std::size_t a = 0; a < m; ++a) {
    h.edge_index_.try_emplace(h.edge_labels_[a], static_cast<EdgeId>(a));
  }
  if (h.edge_index_.size() != m) {
    throw Error(Errc::invalid_argument, "hyperedge labels are not unique");
  }

  // Transpose into node -> hyperedges. Visiting hyperedges in index order
  // leaves every node list sorted.
  const std::size_t n = h.node_labels_.size();
  h.node_offsets_.assign(n + 1, 0);
  for (NodeId v : h.edge_members_) ++h.node_offsets_[v + 1];
  std::partial_sum(h.node_offsets_.begin(), h.node_offsets_.end(), h.node_offsets_.begin());
  h.node_edges_.resize(h.edge_members_.size());
  std::vector<std::size_t> cursor(h.node_offsets_.begin(), h.node_offsets_.end() - 1);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t p = h.edge_offsets_[a]; p < h.edge_offsets_[a + 1]; ++p) {
      h.node_edges_[cursor[h.edge_members_[p]]++] = static_cast<EdgeId>(a);
    }
  }
  return h;
}

Hypergraph Hypergraph::build(std::span<const std::vector<std::int64_t>> hyperedges) {
  std::vector<std::vector<std::string>> labels;
  labels.reserve(hyperedges.size());
  for (const auto& e : hyperedges) {
    auto& out = labels.emplace_back();
    out.reserve(e.size());
    for (auto v : e) out.push_back(std::to_string(v));
  }
  return build(labels);
}

Hypergraph Hypergraph::build(std::initializer_list<std::vector<std::int64_t>> hyperedges) {
  return build(std::span<const std::vector<std::int64_t>>(hyperedges.begin(), hyperedges.size()));
}

std::size_t Hypergraph::degree(NodeId node) const { return hyperedges_of(node).size(); }

std::size_t Hypergraph::size(EdgeId hyperedge) const { return members(hyperedge).size(); }

std::span<const EdgeId> Hypergraph::hyperedges_of(NodeId node) const {
  if (node >= node_count()) {
    throw Error(Errc::index_out_of_range, "node index " + std::to_string(node));
  }
  return {node_edges_.data() + node_offsets_[node], node_offsets_[node + 1] - node_offsets_[node]};
}

std::span<const NodeId> Hypergraph::members(EdgeId hyperedge) const {
  if (hyperedge >= hyperedge_count()) {
    throw Error(Errc::index_out_of_range, "hyperedge index " + std::to_string(hyperedge));
  }
  return {edge_members_.data() + edge_offsets_[hyperedge],
          edge_offsets_[hyperedge + 1] - edge_offsets_[hyperedge]};
}

bool Hypergraph::contains(NodeId node, EdgeId hyperedge) const {
  auto edges = hyperedges_of(node);
  return std::binary_search(edges.begin(), edges.end(), hyperedge);
}

const std::string& Hypergraph::node_label(NodeId node) const {
  if (node >= node_count()) {
    throw Error(Errc::index_out_of_range, "node index " + std::to_string(node));
  }
  return node_labels_[node];
}

const std::string& Hypergraph::hyperedge_label(EdgeId hyperedge) const {
  if (hyperedge >= hyperedge_count()) {
    throw Error(Errc::index_out_of_range, "hyperedge index " + std::to_string(hyperedge));
  }
  return edge_labels_[hyperedge];
}

std::optional<NodeId> Hypergraph::find_node(std::string_view label) const {
  auto it = node_index_.find(std::string(label));
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Hypergraph::find_hyperedge(std::string_view label) const {
  auto it = edge_index_.find(std::string(label));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> connected_components(const Hypergraph& h) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  const std::size_t n = h.node_count();
  std::vector<std::uint32_t> component(n, kUnset);
  std::vector<bool> edge_seen(h.hyperedge_count(), false);
  std::vector<NodeId> stack;
  std::uint32_t next_id = 0;

  for (NodeId start = 0; start < n; ++start) {
    if (component[start] != kUnset) continue;
    component[start] = next_id;
    stack.push_back(start);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (EdgeId a : h.hyperedges_of(v)) {
        if (edge_seen[a]) continue;
        edge_seen[a] = true;
        for (NodeId u : h.members(a)) {
          if (component[u] == kUnset) {
            component[u] = next_id;
            stack.push_back(u);
          }
        }
      }
    }
    ++next_id;
  }
  return component;
}

bool is_connected(const Hypergraph& h) {
  auto component = connected_components(h);
  return std::all_of(component.begin(), component.end(), [](auto c) { return c == 0; });
}

Hypergraph largest_connected_component(const Hypergraph& h) {
  auto component = connected_components(h);
  const auto count = *std::max_element(component.begin(), component.end()) + 1;
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : component) ++sizes[c];
  // max_element returns the first maximum, i.e. the component whose
  // smallest node index is lowest.
  const auto best =
      static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  std::vector<std::vector<std::string>> edges;
  std::vector<std::string> edge_labels;
  for (EdgeId a = 0; a < h.hyperedge_count(); ++a) {
    auto members = h.members(a);
    if (component[members.front()] != best) continue;
    auto& out = edges.emplace_back();
    out.reserve(members.size());
    for (NodeId v : members) out.push_back(h.node_label(v));
    edge_labels.push_back(h.hyperedge_label(a));
  }
  return Hypergraph::build(edges, std::move(edge_labels));
}

}  // namespace hyperwalk
