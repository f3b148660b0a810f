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

#include "mock_server.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>

namespace hyperwalk::testing {
namespace {

constexpr int kPollMs = 20;

void send_line(int fd, const std::string& line) {
  std::string data = line + "\n";
  std::size_t sent = 0;
  while (sent < data.size()) {
    ssize_t rc = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (rc <= 0) return;  // peer went away; nothing to do
    sent += static_cast<std::size_t>(rc);
  }
}

}  // namespace

MockLineServer::MockLineServer(const Hypergraph& h, MockFaults faults, std::uint16_t port)
    : h_(&h), faults_(std::move(faults)) {
  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw std::runtime_error("socket failed");
  int one = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(port);
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 ||
      ::listen(listen_fd_, 16) != 0) {
    ::close(listen_fd_);
    throw std::runtime_error(std::string("bind/listen failed: ") + std::strerror(errno));
  }
  socklen_t len = sizeof addr;
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
  thread_ = std::jthread([this](std::stop_token stop) { serve(stop); });
}

MockLineServer::~MockLineServer() {
  thread_.request_stop();
  if (thread_.joinable()) thread_.join();
  ::close(listen_fd_);
}

std::string MockLineServer::answer(const std::string& line) const {
  if (line.size() < 3 || line[1] != ' ') return "ERR malformed request";
  const std::string label = line.substr(2);
  std::string reply;
  if (line[0] == 'N') {
    auto node = h_->find_node(label);
    if (!node) return "ERR unknown node " + label;
    for (EdgeId e : h_->hyperedges_of(*node)) {
      if (!reply.empty()) reply += ' ';
      reply += h_->hyperedge_label(e);
    }
    return reply;
  }
  if (line[0] == 'E') {
    auto edge = h_->find_hyperedge(label);
    if (!edge) return "ERR unknown hyperedge " + label;
    for (NodeId v : h_->members(*edge)) {
      if (!reply.empty()) reply += ' ';
      reply += h_->node_label(v);
    }
    return reply;
  }
  return "ERR unknown verb";
}

void MockLineServer::serve(std::stop_token stop) {
  while (!stop.stop_requested()) {
    pollfd p{listen_fd_, POLLIN, 0};
    if (::poll(&p, 1, kPollMs) <= 0) continue;
    int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) continue;
    ++connections_;
    handle(fd, stop);
    ::close(fd);
  }
}

void MockLineServer::handle(int fd, const std::stop_token& stop) {
  std::string inbox;
  char chunk[4096];
  while (!stop.stop_requested()) {
    auto newline = inbox.find('\n');
    if (newline == std::string::npos) {
      pollfd p{fd, POLLIN, 0};
      if (::poll(&p, 1, kPollMs) <= 0) continue;
      ssize_t rc = ::recv(fd, chunk, sizeof chunk, 0);
      if (rc <= 0) return;
      inbox.append(chunk, static_cast<std::size_t>(rc));
      continue;
    }
    std::string line = inbox.substr(0, newline);
    inbox.erase(0, newline + 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::uint64_t index = ++requests_;
    if (faults_.drop.contains(index)) return;
    if (faults_.stall.contains(index)) std::this_thread::sleep_for(faults_.stall_for);
    send_line(fd, answer(line));
  }
}

}  // namespace hyperwalk::testing
