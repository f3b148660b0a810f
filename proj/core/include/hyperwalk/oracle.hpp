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

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk {

struct QueryStats {
  std::uint64_t node_queries = 0;
  std::uint64_t hyperedge_queries = 0;

  friend bool operator==(const QueryStats&, const QueryStats&) = default;
};

struct QueryBudget {
  std::optional<std::uint64_t> max_node_queries;
  std::optional<std::uint64_t> max_hyperedge_queries;
};

/// The only access path walkers have to a hypergraph.
///
/// Ids are local to the oracle instance. A returned span stays valid until
/// the next query of the same kind on the same oracle. Every answered query
/// increments the matching counter, duplicates included.
class QueryOracle {
 public:
  virtual ~QueryOracle() = default;

  /// Incident hyperedges of `node`. Throws UnknownNode or BudgetExhausted.
  virtual std::span<const EdgeId> query_node(NodeId node) = 0;
  /// Member nodes of `hyperedge`. Throws UnknownHyperedge or BudgetExhausted.
  virtual std::span<const NodeId> query_hyperedge(EdgeId hyperedge) = 0;

  /// Resolves a label to a local id without issuing a query. Remote
  /// backends may hand out an id for a label the server does not know; the
  /// first query on it then fails with UnknownNode.
  virtual std::optional<NodeId> find_node(std::string_view label) = 0;

  virtual std::string node_label(NodeId node) const = 0;
  virtual std::string hyperedge_label(EdgeId hyperedge) const = 0;

  virtual QueryStats stats() const = 0;
};

/// Answers straight from a Hypergraph held by reference; the hypergraph must
/// outlive the oracle. Counters are atomic so one instance can serve several
/// walks at once.
class InMemoryOracle final : public QueryOracle {
 public:
  explicit InMemoryOracle(const Hypergraph& h) : h_(&h) {}

  std::span<const EdgeId> query_node(NodeId node) override;
  std::span<const NodeId> query_hyperedge(EdgeId hyperedge) override;
  std::optional<NodeId> find_node(std::string_view label) override;
  std::string node_label(NodeId node) const override;
  std::string hyperedge_label(EdgeId hyperedge) const override;
  QueryStats stats() const override;

  const Hypergraph& hypergraph() const noexcept { return *h_; }

 private:
  const Hypergraph* h_;
  std::atomic<std::uint64_t> node_queries_{0};
  std::atomic<std::uint64_t> hyperedge_queries_{0};
};

/// Per-walk counting wrapper with optional hard limits. A query that would
/// exceed a limit throws BudgetExhausted before reaching the inner oracle.
class BudgetedOracle final : public QueryOracle {
 public:
  BudgetedOracle(QueryOracle& inner, QueryBudget budget = {}) : inner_(&inner), budget_(budget) {}

  std::span<const EdgeId> query_node(NodeId node) override;
  std::span<const NodeId> query_hyperedge(EdgeId hyperedge) override;
  std::optional<NodeId> find_node(std::string_view label) override {
    return inner_->find_node(label);
  }
  std::string node_label(NodeId node) const override { return inner_->node_label(node); }
  std::string hyperedge_label(EdgeId hyperedge) const override {
    return inner_->hyperedge_label(hyperedge);
  }
  QueryStats stats() const override { return stats_; }

 private:
  QueryOracle* inner_;
  QueryBudget budget_;
  QueryStats stats_;
};

/// Caches answers. stats() still counts every call (raw view); the inner
/// oracle only sees the first query per id, which deduplicated_stats()
/// reports.
class MemoizingOracle final : public QueryOracle {
 public:
  explicit MemoizingOracle(QueryOracle& inner) : inner_(&inner) {}

  std::span<const EdgeId> query_node(NodeId node) override;
  std::span<const NodeId> query_hyperedge(EdgeId hyperedge) override;
  std::optional<NodeId> find_node(std::string_view label) override {
    return inner_->find_node(label);
  }
  std::string node_label(NodeId node) const override { return inner_->node_label(node); }
  std::string hyperedge_label(EdgeId hyperedge) const override {
    return inner_->hyperedge_label(hyperedge);
  }
  QueryStats stats() const override { return raw_; }
  QueryStats deduplicated_stats() const {
    return {node_cache_.size(), hyperedge_cache_.size()};
  }

 private:
  QueryOracle* inner_;
  QueryStats raw_;
  std::unordered_map<NodeId, std::vector<EdgeId>> node_cache_;
  std::unordered_map<EdgeId, std::vector<NodeId>> hyperedge_cache_;
};

}  // namespace hyperwalk
