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

#include "hyperwalk/remote_oracle.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <thread>

#include "hyperwalk/error.hpp"

namespace hyperwalk {
namespace {

// Internal signal for a retryable transport problem.
struct TransportFailure {
  std::string what;
};

double parse_double(std::string_view text, std::string_view what) {
  std::string s(text);
  char* end = nullptr;
  double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(Errc::parse_error, std::string(what) + ": '" + s + "' is not a number");
  }
  return value;
}

int remaining_ms(std::chrono::steady_clock::time_point deadline) {
  auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
      deadline - std::chrono::steady_clock::now());
  return static_cast<int>(std::max<std::int64_t>(0, left.count()));
}

}  // namespace

RateLimit parse_rate_limit(std::string_view text) {
  RateLimit limit;
  auto comma = text.find(',');
  if (comma != std::string_view::npos) {
    limit.burst = parse_double(text.substr(comma + 1), "rate limit burst");
    text = text.substr(0, comma);
  }
  auto slash = text.find('/');
  double count = parse_double(text.substr(0, slash), "rate limit");
  double seconds = 1.0;
  if (slash != std::string_view::npos) {
    seconds = parse_double(text.substr(slash + 1), "rate limit period");
  }
  if (count <= 0 || seconds <= 0 || limit.burst < 1) {
    throw Error(Errc::invalid_argument, "rate limit must be positive with burst >= 1");
  }
  limit.requests_per_second = count / seconds;
  return limit;
}

TokenBucket::TokenBucket(RateLimit limit, NowFn now, SleepFn sleep)
    : limit_(limit), now_(std::move(now)), sleep_(std::move(sleep)), tokens_(limit.burst) {
  if (!sleep_) sleep_ = [](Clock::duration d) { std::this_thread::sleep_for(d); };
  last_ = now_();
}

void TokenBucket::refill() {
  auto now = now_();
  std::chrono::duration<double> elapsed = now - last_;
  last_ = now;
  tokens_ = std::min(limit_.burst, tokens_ + elapsed.count() * limit_.requests_per_second);
}

double TokenBucket::tokens() {
  refill();
  return tokens_;
}

void TokenBucket::acquire() {
  refill();
  while (tokens_ < 1.0) {
    std::chrono::duration<double> wait((1.0 - tokens_) / limit_.requests_per_second);
    sleep_(std::chrono::duration_cast<Clock::duration>(wait) + Clock::duration(1));
    refill();
  }
  tokens_ -= 1.0;
}

RemoteConfig RemoteConfig::from_endpoint(std::string_view endpoint) {
  auto colon = endpoint.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == endpoint.size()) {
    throw Error(Errc::invalid_argument,
                "endpoint must be host:port, got '" + std::string(endpoint) + "'");
  }
  RemoteConfig config;
  config.host = std::string(endpoint.substr(0, colon));
  auto port_text = endpoint.substr(colon + 1);
  unsigned port = 0;
  auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
  if (ec != std::errc() || ptr != port_text.data() + port_text.size() || port == 0 ||
      port > 65535) {
    throw Error(Errc::invalid_argument, "bad port in endpoint '" + std::string(endpoint) + "'");
  }
  config.port = static_cast<std::uint16_t>(port);
  return config;
}

void RemoteConfig::apply_environment() {
  if (const char* endpoint = std::getenv("HYPERWALK_ENDPOINT")) {
    auto parsed = from_endpoint(endpoint);
    host = parsed.host;
    port = parsed.port;
  }
  if (const char* timeout_ms = std::getenv("HYPERWALK_TIMEOUT_MS")) {
    timeout = std::chrono::milliseconds(
        static_cast<std::int64_t>(parse_double(timeout_ms, "HYPERWALK_TIMEOUT_MS")));
  }
  if (const char* retry_count = std::getenv("HYPERWALK_RETRIES")) {
    retries = static_cast<int>(parse_double(retry_count, "HYPERWALK_RETRIES"));
  }
  if (const char* rate = std::getenv("HYPERWALK_RATE_LIMIT")) {
    rate_limit = parse_rate_limit(rate);
  }
}

RemoteOracle::RemoteOracle(RemoteConfig config) : config_(std::move(config)) {
  if (config_.port == 0) throw Error(Errc::invalid_argument, "remote oracle needs a port");
  if (config_.retries < 0) throw Error(Errc::invalid_argument, "retries must be >= 0");
  if (config_.rate_limit) bucket_.emplace(*config_.rate_limit);
}

RemoteOracle::~RemoteOracle() { disconnect(); }

void RemoteOracle::disconnect() noexcept {
  if (fd_ >= 0) ::close(fd_);
  fd_ = -1;
  inbox_.clear();
}

void RemoteOracle::connect() {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* found = nullptr;
  const auto port = std::to_string(config_.port);
  if (int rc = ::getaddrinfo(config_.host.c_str(), port.c_str(), &hints, &found); rc != 0) {
    throw TransportFailure{"resolve " + config_.host + ": " + ::gai_strerror(rc)};
  }
  std::string last_error = "no address";
  for (auto* ai = found; ai != nullptr; ai = ai->ai_next) {
    int fd = ::socket(ai->ai_family, ai->ai_socktype | SOCK_NONBLOCK | SOCK_CLOEXEC,
                      ai->ai_protocol);
    if (fd < 0) continue;
    int rc = ::connect(fd, ai->ai_addr, ai->ai_addrlen);
    if (rc != 0 && errno == EINPROGRESS) {
      pollfd p{fd, POLLOUT, 0};
      rc = ::poll(&p, 1, static_cast<int>(config_.timeout.count()));
      if (rc == 1) {
        int err = 0;
        socklen_t len = sizeof err;
        ::getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &len);
        rc = err == 0 ? 0 : -1;
        if (err) errno = err;
      } else {
        rc = -1;
        errno = ETIMEDOUT;
      }
    }
    if (rc == 0) {
      fd_ = fd;
      ::freeaddrinfo(found);
      return;
    }
    last_error = std::strerror(errno);
    ::close(fd);
  }
  ::freeaddrinfo(found);
  throw TransportFailure{"connect " + config_.host + ":" + port + ": " + last_error};
}

void RemoteOracle::send_all(const std::string& data) {
  auto deadline = std::chrono::steady_clock::now() + config_.timeout;
  std::size_t sent = 0;
  while (sent < data.size()) {
    ssize_t rc = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (rc > 0) {
      sent += static_cast<std::size_t>(rc);
      continue;
    }
    if (rc < 0 && (errno == EAGAIN || errno == EWOULDBLOCK || errno == EINTR)) {
      pollfd p{fd_, POLLOUT, 0};
      if (::poll(&p, 1, remaining_ms(deadline)) <= 0) throw TransportFailure{"send timed out"};
      continue;
    }
    throw TransportFailure{std::string("send: ") + std::strerror(errno)};
  }
}

std::string RemoteOracle::read_line() {
  auto deadline = std::chrono::steady_clock::now() + config_.timeout;
  char chunk[4096];
  for (;;) {
    auto newline = inbox_.find('\n');
    if (newline != std::string::npos) {
      std::string line = inbox_.substr(0, newline);
      inbox_.erase(0, newline + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    pollfd p{fd_, POLLIN, 0};
    int ready = ::poll(&p, 1, remaining_ms(deadline));
    if (ready == 0) throw TransportFailure{"response timed out"};
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw TransportFailure{std::string("poll: ") + std::strerror(errno)};
    }
    ssize_t rc = ::recv(fd_, chunk, sizeof chunk, 0);
    if (rc == 0) throw TransportFailure{"connection closed by server"};
    if (rc < 0) {
      if (errno == EAGAIN || errno == EWOULDBLOCK || errno == EINTR) continue;
      throw TransportFailure{std::string("recv: ") + std::strerror(errno)};
    }
    inbox_.append(chunk, static_cast<std::size_t>(rc));
  }
}

std::string RemoteOracle::round_trip(const std::string& request) {
  std::string last_error;
  for (int attempt = 0; attempt <= config_.retries; ++attempt) {
    if (bucket_) bucket_->acquire();
    try {
      if (fd_ < 0) connect();
      ++requests_sent_;
      send_all(request + "\n");
      return read_line();
    } catch (const TransportFailure& failure) {
      last_error = failure.what;
      disconnect();
    }
  }
  throw Error(Errc::remote_failure, "'" + request + "' failed after " +
                                        std::to_string(config_.retries + 1) +
                                        " attempt(s): " + last_error);
}

NodeId RemoteOracle::intern_node(const std::string& label) {
  auto [it, inserted] = node_ids_.try_emplace(label, static_cast<NodeId>(node_labels_.size()));
  if (inserted) node_labels_.push_back(label);
  return it->second;
}

EdgeId RemoteOracle::intern_hyperedge(const std::string& label) {
  auto [it, inserted] = edge_ids_.try_emplace(label, static_cast<EdgeId>(edge_labels_.size()));
  if (inserted) edge_labels_.push_back(label);
  return it->second;
}

std::span<const EdgeId> RemoteOracle::query_node(NodeId node) {
  if (node >= node_labels_.size()) {
    throw Error(Errc::unknown_node, "node id " + std::to_string(node));
  }
  auto reply = round_trip("N " + node_labels_[node]);
  if (reply.starts_with("ERR")) {
    throw Error(Errc::unknown_node, "'" + node_labels_[node] + "': " + reply);
  }
  std::istringstream tokens(reply);
  std::string label;
  node_answer_.clear();
  while (tokens >> label) node_answer_.push_back(intern_hyperedge(label));
  if (node_answer_.empty()) {
    throw Error(Errc::remote_failure, "empty hyperedge list for '" + node_labels_[node] + "'");
  }
  ++stats_.node_queries;
  return node_answer_;
}

std::span<const NodeId> RemoteOracle::query_hyperedge(EdgeId hyperedge) {
  if (hyperedge >= edge_labels_.size()) {
    throw Error(Errc::unknown_hyperedge, "hyperedge id " + std::to_string(hyperedge));
  }
  auto reply = round_trip("E " + edge_labels_[hyperedge]);
  if (reply.starts_with("ERR")) {
    throw Error(Errc::unknown_hyperedge, "'" + edge_labels_[hyperedge] + "': " + reply);
  }
  std::istringstream tokens(reply);
  std::string label;
  edge_answer_.clear();
  while (tokens >> label) edge_answer_.push_back(intern_node(label));
  if (edge_answer_.size() < 2) {
    throw Error(Errc::remote_failure,
                "hyperedge '" + edge_labels_[hyperedge] + "' has fewer than two members");
  }
  ++stats_.hyperedge_queries;
  return edge_answer_;
}

std::optional<NodeId> RemoteOracle::find_node(std::string_view label) {
  if (label.empty() || label.find_first_of(" \t\r\n") != std::string_view::npos) {
    return std::nullopt;
  }
  return intern_node(std::string(label));
}

std::string RemoteOracle::node_label(NodeId node) const {
  if (node >= node_labels_.size()) {
    throw Error(Errc::index_out_of_range, "node id " + std::to_string(node));
  }
  return node_labels_[node];
}

std::string RemoteOracle::hyperedge_label(EdgeId hyperedge) const {
  if (hyperedge >= edge_labels_.size()) {
    throw Error(Errc::index_out_of_range, "hyperedge id " + std::to_string(hyperedge));
  }
  return edge_labels_[hyperedge];
}

}  // namespace hyperwalk
