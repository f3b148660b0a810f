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

#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <vector>

#include "helpers.hpp"
#include "hyperwalk/remote_oracle.hpp"
#include "hyperwalk/walk.hpp"
#include "mock_server.hpp"

namespace hyperwalk {
namespace {

using namespace std::chrono_literals;
using testing::error_code_of;
using testing::MockLineServer;

Hypergraph tri() { return Hypergraph::build({{1, 2, 3}, {2, 3}}); }

RemoteConfig config_for(const MockLineServer& server, std::chrono::milliseconds timeout = 2000ms,
                        int retries = 2) {
  auto c = RemoteConfig::from_endpoint(server.endpoint());
  c.timeout = timeout;
  c.retries = retries;
  return c;
}

std::vector<std::string> labels_of_edges(const RemoteOracle& o, std::span<const EdgeId> ids) {
  std::vector<std::string> out;
  for (auto e : ids) out.push_back(o.hyperedge_label(e));
  return out;
}

TEST(RateLimit, ParsesRatesPeriodsAndBurst) {
  auto a = parse_rate_limit("10");
  EXPECT_DOUBLE_EQ(a.requests_per_second, 10.0);
  EXPECT_DOUBLE_EQ(a.burst, 1.0);
  auto b = parse_rate_limit("100000/86400,50");
  EXPECT_DOUBLE_EQ(b.requests_per_second, 100000.0 / 86400.0);
  EXPECT_DOUBLE_EQ(b.burst, 50.0);
  EXPECT_EQ(error_code_of([] { parse_rate_limit("fast"); }), Errc::parse_error);
  EXPECT_EQ(error_code_of([] { parse_rate_limit("0"); }), Errc::invalid_argument);
  EXPECT_EQ(error_code_of([] { parse_rate_limit("5,0.5"); }), Errc::invalid_argument);
}

TEST(TokenBucket, BurstThenPacedByFakeClock) {
  using Clock = TokenBucket::Clock;
  Clock::time_point now{};
  std::vector<Clock::duration> sleeps;
  TokenBucket bucket(
      RateLimit{2.0, 3.0}, [&] { return now; },
      [&](Clock::duration d) {
        sleeps.push_back(d);
        now += d;
      });
  for (int i = 0; i < 3; ++i) bucket.acquire();
  EXPECT_TRUE(sleeps.empty());
  bucket.acquire();  // empty bucket: needs half a second at 2/s
  ASSERT_EQ(sleeps.size(), 1u);
  EXPECT_NEAR(std::chrono::duration<double>(sleeps[0]).count(), 0.5, 1e-6);

  now += 10s;  // refill is capped at the burst size
  EXPECT_DOUBLE_EQ(bucket.tokens(), 3.0);
}

TEST(TokenBucket, LongRunRateMatchesLimit) {
  using Clock = TokenBucket::Clock;
  Clock::time_point start{}, now{};
  TokenBucket bucket(RateLimit{5.0, 1.0}, [&] { return now; },
                     [&](Clock::duration d) { now += d; });
  for (int i = 0; i < 101; ++i) bucket.acquire();
  // first token is free, the other 100 take 20 s at 5/s
  EXPECT_NEAR(std::chrono::duration<double>(now - start).count(), 20.0, 1e-3);
}

TEST(RemoteConfig, EndpointParsing) {
  auto c = RemoteConfig::from_endpoint("example.org:8080");
  EXPECT_EQ(c.host, "example.org");
  EXPECT_EQ(c.port, 8080);
  EXPECT_EQ(error_code_of([] { RemoteConfig::from_endpoint("example.org"); }),
            Errc::invalid_argument);
  EXPECT_EQ(error_code_of([] { RemoteConfig::from_endpoint("h:70000"); }), Errc::invalid_argument);
  EXPECT_EQ(error_code_of([] { RemoteConfig::from_endpoint("h:x1"); }), Errc::invalid_argument);
}

TEST(RemoteConfig, EnvironmentOverrides) {
  ::setenv("HYPERWALK_ENDPOINT", "10.0.0.1:9000", 1);
  ::setenv("HYPERWALK_TIMEOUT_MS", "250", 1);
  ::setenv("HYPERWALK_RETRIES", "5", 1);
  ::setenv("HYPERWALK_RATE_LIMIT", "3/2", 1);
  RemoteConfig c;
  c.apply_environment();
  ::unsetenv("HYPERWALK_ENDPOINT");
  ::unsetenv("HYPERWALK_TIMEOUT_MS");
  ::unsetenv("HYPERWALK_RETRIES");
  ::unsetenv("HYPERWALK_RATE_LIMIT");
  EXPECT_EQ(c.host, "10.0.0.1");
  EXPECT_EQ(c.port, 9000);
  EXPECT_EQ(c.timeout, 250ms);
  EXPECT_EQ(c.retries, 5);
  ASSERT_TRUE(c.rate_limit.has_value());
  EXPECT_DOUBLE_EQ(c.rate_limit->requests_per_second, 1.5);
}

TEST(RemoteOracle, AnswersInServerOrderWithLocalIds) {
  auto h = tri();
  MockLineServer server(h);
  RemoteOracle oracle(config_for(server));
  const NodeId n2 = *oracle.find_node("2");
  EXPECT_EQ(n2, 0u);  // first label seen
  auto edges = oracle.query_node(n2);
  EXPECT_EQ(labels_of_edges(oracle, edges), (std::vector<std::string>{"0", "1"}));
  auto members = oracle.query_hyperedge(edges[0]);
  std::vector<std::string> names;
  for (auto v : members) names.push_back(oracle.node_label(v));
  EXPECT_EQ(names, (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(oracle.stats(), (QueryStats{1, 1}));
  EXPECT_EQ(oracle.requests_sent(), 2u);
}

TEST(RemoteOracle, ServerErrorsMapToUnknownIds) {
  auto h = tri();
  MockLineServer server(h);
  RemoteOracle oracle(config_for(server));
  const NodeId ghost = *oracle.find_node("ghost");
  EXPECT_EQ(error_code_of([&] { oracle.query_node(ghost); }), Errc::unknown_node);
  EXPECT_EQ(error_code_of([&] { oracle.query_hyperedge(99); }), Errc::unknown_hyperedge);
  EXPECT_FALSE(oracle.find_node("has space").has_value());
  EXPECT_EQ(oracle.stats(), (QueryStats{0, 0}));
}

TEST(RemoteOracle, RetriesAfterDroppedConnection) {
  auto h = tri();
  MockLineServer server(h, {.drop = {1}});
  RemoteOracle oracle(config_for(server));
  auto edges = oracle.query_node(*oracle.find_node("1"));
  EXPECT_EQ(edges.size(), 1u);
  EXPECT_EQ(oracle.requests_sent(), 2u);
  EXPECT_EQ(server.connections(), 2u);
  EXPECT_EQ(oracle.stats().node_queries, 1u);
}

TEST(RemoteOracle, RetriesAfterTimeout) {
  auto h = tri();
  // The server is single-threaded: the retry is answered once the stalled
  // request is done, inside the second timeout window.
  MockLineServer server(h, {.stall = {1}, .stall_for = 300ms});
  RemoteOracle oracle(config_for(server, 200ms));
  auto edges = oracle.query_node(*oracle.find_node("3"));
  EXPECT_EQ(edges.size(), 2u);
  EXPECT_EQ(oracle.requests_sent(), 2u);
}

TEST(RemoteOracle, GivesUpAfterRetriesAreSpent) {
  auto h = tri();
  MockLineServer server(h, {.drop = {1, 2, 3}});
  RemoteOracle oracle(config_for(server, 2000ms, 1));
  EXPECT_EQ(error_code_of([&] { oracle.query_node(*oracle.find_node("1")); }),
            Errc::remote_failure);
  EXPECT_EQ(oracle.requests_sent(), 2u);
}

TEST(RemoteOracle, UnreachableEndpointIsRemoteFailure) {
  std::uint16_t port = 0;
  {
    auto h = tri();
    MockLineServer server(h);
    port = server.port();
  }  // closed again; nothing listens there now
  RemoteConfig c;
  c.port = port;
  c.timeout = 200ms;
  c.retries = 0;
  RemoteOracle oracle(c);
  EXPECT_EQ(error_code_of([&] { oracle.query_node(*oracle.find_node("1")); }),
            Errc::remote_failure);
}

TEST(RemoteOracle, WalkTraceMatchesInMemoryOracle) {
  auto h = Hypergraph::build({{1, 2, 3}, {2, 3}, {3, 4, 5, 6}, {6, 1}, {4, 7}});
  MockLineServer server(h);
  for (auto kind : kAllWalkKinds) {
    WalkConfig config;
    config.kind = kind;
    config.length = 300;
    config.seed_node = "4";
    config.rng_seed = 11;
    InMemoryOracle local(h);
    RemoteOracle remote(config_for(server));
    auto a = run_walk(local, config);
    auto b = run_walk(remote, config);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t k = 0; k < a.steps.size(); ++k) {
      ASSERT_EQ(local.node_label(a.steps[k].node), remote.node_label(b.steps[k].node));
      ASSERT_EQ(local.hyperedge_label(a.steps[k].hyperedge),
                remote.hyperedge_label(b.steps[k].hyperedge));
      ASSERT_EQ(a.steps[k].degree, b.steps[k].degree);
      ASSERT_EQ(a.steps[k].size, b.steps[k].size);
    }
    EXPECT_EQ(a.stats, b.stats) << to_string(kind);
  }
}

TEST(RemoteOracle, RateLimitIsHonoured) {
  auto h = tri();
  MockLineServer server(h);
  auto c = config_for(server);
  c.rate_limit = RateLimit{50.0, 1.0};
  RemoteOracle oracle(c);
  const NodeId n = *oracle.find_node("2");
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 11; ++i) oracle.query_node(n);
  auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_GE(elapsed, 190ms);  // 10 paced requests at 50/s
}

}  // namespace
}  // namespace hyperwalk
