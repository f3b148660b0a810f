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

#include "hyperwalk/hypergraph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "hyperwalk/error.hpp"

namespace hyperwalk {
namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "'");
  return in;
}

// Drops repeated members and hyperedges left with fewer than two nodes.
void sanitize(std::vector<std::vector<std::string>>& edges) {
  std::vector<std::vector<std::string>> kept;
  kept.reserve(edges.size());
  std::unordered_set<std::string> seen;
  for (auto& e : edges) {
    seen.clear();
    std::vector<std::string> unique;
    for (auto& label : e) {
      if (seen.insert(label).second) unique.push_back(std::move(label));
    }
    if (unique.size() >= 2) kept.push_back(std::move(unique));
  }
  edges = std::move(kept);
}

std::size_t parse_size(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(Errc::parse_error,
                "sizes line " + std::to_string(line) + ": '" + token + "' is not a size");
  }
  return value;
}

template <typename Emit>
void walk_sizes_members(std::istream& sizes, std::istream& members, Emit&& emit) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> edge;
  while (std::getline(sizes, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    const auto count = parse_size(token, line_no);
    edge.clear();
    for (std::size_t i = 0; i < count; ++i) {
      std::string label;
      if (!(members >> label)) {
        throw Error(Errc::parse_error, "members file ended inside hyperedge on sizes line " +
                                           std::to_string(line_no));
      }
      edge.push_back(std::move(label));
    }
    emit(edge);
  }
  std::string extra;
  if (members >> extra) {
    throw Error(Errc::parse_error, "members file has labels beyond the sum of sizes");
  }
}

}  // namespace

Hypergraph read_hyperedge_list(std::istream& in, const ReadOptions& options) {
  std::vector<std::vector<std::string>> edges;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    auto& edge = edges.emplace_back();
    std::string label;
    while (fields >> label) edge.push_back(std::move(label));
  }
  if (options.sanitize) sanitize(edges);
  return Hypergraph::build(edges);
}

Hypergraph read_hyperedge_list(const std::filesystem::path& path, const ReadOptions& options) {
  auto in = open_input(path);
  return read_hyperedge_list(in, options);
}

Hypergraph read_sizes_members(std::istream& sizes, std::istream& members,
                              const ReadOptions& options) {
  std::vector<std::vector<std::string>> edges;
  walk_sizes_members(sizes, members, [&](const std::vector<std::string>& e) { edges.push_back(e); });
  if (options.sanitize) sanitize(edges);
  return Hypergraph::build(edges);
}

Hypergraph read_sizes_members(const std::filesystem::path& sizes,
                              const std::filesystem::path& members, const ReadOptions& options) {
  auto sizes_in = open_input(sizes);
  auto members_in = open_input(members);
  return read_sizes_members(sizes_in, members_in, options);
}

void write_hyperedge_list(std::ostream& out, const Hypergraph& h) {
  for (EdgeId a = 0; a < h.hyperedge_count(); ++a) {
    bool first = true;
    for (NodeId v : h.members(a)) {
      if (!first) out << ' ';
      out << h.node_label(v);
      first = false;
    }
    out << '\n';
  }
}

void convert_sizes_members(std::istream& sizes, std::istream& members, std::ostream& out) {
  walk_sizes_members(sizes, members, [&](const std::vector<std::string>& e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  });
}

}  // namespace hyperwalk
