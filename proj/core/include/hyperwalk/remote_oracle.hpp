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

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperwalk/oracle.hpp"

namespace hyperwalk {

struct RateLimit {
  double requests_per_second = 0.0;
  double burst = 1.0;
};

/// Parses "N" (requests per second) or "N/S" (N requests per S seconds,
/// e.g. "100000/86400" for a daily cap). Optional ",B" suffix sets the burst.
RateLimit parse_rate_limit(std::string_view text);

/// Classic token bucket. Clock and sleep are injectable for tests.
class TokenBucket {
 public:
  using Clock = std::chrono::steady_clock;
  using NowFn = std::function<Clock::time_point()>;
  using SleepFn = std::function<void(Clock::duration)>;

  explicit TokenBucket(RateLimit limit, NowFn now = Clock::now, SleepFn sleep = {});

  /// Blocks until one token is available, then consumes it.
  void acquire();
  double tokens();

 private:
  void refill();

  RateLimit limit_;
  NowFn now_;
  SleepFn sleep_;
  double tokens_;
  Clock::time_point last_;
};

struct RemoteConfig {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;
  std::chrono::milliseconds timeout{5000};
  int retries = 2;
  std::optional<RateLimit> rate_limit;

  /// "host:port".
  static RemoteConfig from_endpoint(std::string_view endpoint);

  /// Overrides fields from HYPERWALK_ENDPOINT, HYPERWALK_TIMEOUT_MS,
  /// HYPERWALK_RETRIES and HYPERWALK_RATE_LIMIT when those are set.
  void apply_environment();
};

/// Oracle speaking the newline-delimited text protocol over TCP:
///
///   N <node label>       ->  <hyperedge label> <hyperedge label> ...
///   E <hyperedge label>  ->  <node label> <node label> ...
///   errors               ->  ERR <message>
///
/// Local ids are handed out in order of first sight. One request is in
/// flight at a time; transport failures reconnect and resend up to
/// `retries` times before raising RemoteFailure.
class RemoteOracle final : public QueryOracle {
 public:
  explicit RemoteOracle(RemoteConfig config);
  ~RemoteOracle() override;

  RemoteOracle(const RemoteOracle&) = delete;
  RemoteOracle& operator=(const RemoteOracle&) = delete;

  std::span<const EdgeId> query_node(NodeId node) override;
  std::span<const NodeId> query_hyperedge(EdgeId hyperedge) override;
  std::optional<NodeId> find_node(std::string_view label) override;
  std::string node_label(NodeId node) const override;
  std::string hyperedge_label(EdgeId hyperedge) const override;
  QueryStats stats() const override { return stats_; }

  /// Number of requests put on the wire, retries included.
  std::uint64_t requests_sent() const noexcept { return requests_sent_; }

 private:
  std::string round_trip(const std::string& request);
  void connect();
  void disconnect() noexcept;
  void send_all(const std::string& data);
  std::string read_line();

  NodeId intern_node(const std::string& label);
  EdgeId intern_hyperedge(const std::string& label);

  RemoteConfig config_;
  std::optional<TokenBucket> bucket_;
  int fd_ = -1;
  std::string inbox_;
  QueryStats stats_;
  std::uint64_t requests_sent_ = 0;

  std::vector<std::string> node_labels_;
  std::vector<std::string> edge_labels_;
  std::unordered_map<std::string, NodeId> node_ids_;
  std::unordered_map<std::string, EdgeId> edge_ids_;
  std::vector<EdgeId> node_answer_;
  std::vector<NodeId> edge_answer_;
};

}  // namespace hyperwalk
