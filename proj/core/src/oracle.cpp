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

#include "hyperwalk/oracle.hpp"

#include "hyperwalk/error.hpp"

namespace hyperwalk {

std::span<const EdgeId> InMemoryOracle::query_node(NodeId node) {
  if (node >= h_->node_count()) {
    throw Error(Errc::unknown_node, "node id " + std::to_string(node));
  }
  node_queries_.fetch_add(1, std::memory_order_relaxed);
  return h_->hyperedges_of(node);
}

std::span<const NodeId> InMemoryOracle::query_hyperedge(EdgeId hyperedge) {
  if (hyperedge >= h_->hyperedge_count()) {
    throw Error(Errc::unknown_hyperedge, "hyperedge id " + std::to_string(hyperedge));
  }
  hyperedge_queries_.fetch_add(1, std::memory_order_relaxed);
  return h_->members(hyperedge);
}

std::optional<NodeId> InMemoryOracle::find_node(std::string_view label) {
  return h_->find_node(label);
}

std::string InMemoryOracle::node_label(NodeId node) const { return h_->node_label(node); }

std::string InMemoryOracle::hyperedge_label(EdgeId hyperedge) const {
  return h_->hyperedge_label(hyperedge);
}

QueryStats InMemoryOracle::stats() const {
  return {node_queries_.load(std::memory_order_relaxed),
          hyperedge_queries_.load(std::memory_order_relaxed)};
}

std::span<const EdgeId> BudgetedOracle::query_node(NodeId node) {
  if (budget_.max_node_queries && stats_.node_queries >= *budget_.max_node_queries) {
    throw Error(Errc::budget_exhausted,
                "node query limit " + std::to_string(*budget_.max_node_queries) + " reached");
  }
  auto answer = inner_->query_node(node);
  ++stats_.node_queries;
  return answer;
}

std::span<const NodeId> BudgetedOracle::query_hyperedge(EdgeId hyperedge) {
  if (budget_.max_hyperedge_queries &&
      stats_.hyperedge_queries >= *budget_.max_hyperedge_queries) {
    throw Error(Errc::budget_exhausted, "hyperedge query limit " +
                                            std::to_string(*budget_.max_hyperedge_queries) +
                                            " reached");
  }
  auto answer = inner_->query_hyperedge(hyperedge);
  ++stats_.hyperedge_queries;
  return answer;
}

std::span<const EdgeId> MemoizingOracle::query_node(NodeId node) {
  auto it = node_cache_.find(node);
  if (it == node_cache_.end()) {
    auto answer = inner_->query_node(node);
    it = node_cache_.emplace(node, std::vector<EdgeId>(answer.begin(), answer.end())).first;
  }
  ++raw_.node_queries;
  return it->second;
}

std::span<const NodeId> MemoizingOracle::query_hyperedge(EdgeId hyperedge) {
  auto it = hyperedge_cache_.find(hyperedge);
  if (it == hyperedge_cache_.end()) {
    auto answer = inner_->query_hyperedge(hyperedge);
    it = hyperedge_cache_
             .emplace(hyperedge, std::vector<NodeId>(answer.begin(), answer.end()))
             .first;
  }
  ++raw_.hyperedge_queries;
  return it->second;
}

}  // namespace hyperwalk
