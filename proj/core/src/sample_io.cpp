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

#include "hyperwalk/sample_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "hyperwalk/error.hpp"
#include "json.hpp"

namespace hyperwalk {

using json = nlohmann::ordered_json;

namespace {
constexpr const char* kFormat = "hyperwalk-sample/1";
}

void write_sample(std::ostream& out, const SampleSequence& seq, const WalkConfig& config,
                  const QueryOracle& labels) {
  json degrees = json::object();
  json sizes = json::object();
  std::vector<std::string> node_names;
  std::vector<std::string> edge_names;
  node_names.reserve(seq.steps.size());
  edge_names.reserve(seq.steps.size());
  for (const auto& step : seq.steps) {
    auto& x = node_names.emplace_back(labels.node_label(step.node));
    auto& y = edge_names.emplace_back(labels.hyperedge_label(step.hyperedge));
    if (!degrees.contains(x)) degrees[x] = step.degree;
    if (!sizes.contains(y)) sizes[y] = step.size;
  }

  json header = {
      {"format", kFormat},
      {"walk", to_string(config.kind)},
      {"length", config.length},
      {"seed_node", config.seed_node},
      {"rng_seed", config.rng_seed},
      {"burn_in", config.burn_in},
      {"steps", seq.steps.size()},
      {"truncated", seq.truncated},
      {"stats", {{"node_queries", seq.stats.node_queries},
                 {"hyperedge_queries", seq.stats.hyperedge_queries}}},
      {"node_degrees", std::move(degrees)},
      {"hyperedge_sizes", std::move(sizes)},
  };
  out << header.dump() << '\n';
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    out << (k + 1) << ' ' << node_names[k] << ' ' << edge_names[k] << '\n';
  }
}

SampleFile read_sample(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::parse_error, "sample file is empty");

  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("sample header: ") + e.what());
  }

  SampleFile file;
  json degrees;
  json sizes;
  std::size_t expected_steps = 0;
  try {
    if (header.at("format").get<std::string>() != kFormat) {
      throw Error(Errc::parse_error, "unsupported sample format");
    }
    file.config.kind = parse_walk_kind(header.at("walk").get<std::string>());
    file.config.length = header.at("length").get<std::size_t>();
    file.config.seed_node = header.at("seed_node").get<std::string>();
    file.config.rng_seed = header.at("rng_seed").get<std::uint64_t>();
    file.config.burn_in = header.at("burn_in").get<std::size_t>();
    file.sequence.truncated = header.at("truncated").get<bool>();
    file.sequence.stats.node_queries = header.at("stats").at("node_queries").get<std::uint64_t>();
    file.sequence.stats.hyperedge_queries =
        header.at("stats").at("hyperedge_queries").get<std::uint64_t>();
    degrees = header.at("node_degrees");
    sizes = header.at("hyperedge_sizes");
    expected_steps = header.at("steps").get<std::size_t>();
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("sample header: ") + e.what());
  }

  std::unordered_map<std::string, NodeId> node_ids;
  std::unordered_map<std::string, EdgeId> edge_ids;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::size_t k = 0;
    std::string x, y;
    if (!(fields >> k >> x >> y) || k != file.sequence.steps.size() + 1) {
      throw Error(Errc::parse_error, "sample line " + std::to_string(line_no) + " is malformed");
    }
    auto [xi, new_node] = node_ids.try_emplace(x, static_cast<NodeId>(file.node_labels.size()));
    if (new_node) file.node_labels.push_back(x);
    auto [yi, new_edge] =
        edge_ids.try_emplace(y, static_cast<EdgeId>(file.hyperedge_labels.size()));
    if (new_edge) file.hyperedge_labels.push_back(y);
    if (!degrees.contains(x) || !sizes.contains(y)) {
      throw Error(Errc::parse_error,
                  "sample line " + std::to_string(line_no) + ": label missing from header");
    }
    try {
      file.sequence.steps.push_back({xi->second, yi->second, degrees.at(x).get<std::uint32_t>(),
                                     sizes.at(y).get<std::uint32_t>()});
    } catch (const json::exception& e) {
      throw Error(Errc::parse_error, "sample line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (file.sequence.steps.size() != expected_steps) {
    throw Error(Errc::parse_error, "header announces " + std::to_string(expected_steps) +
                                       " steps, file has " +
                                       std::to_string(file.sequence.steps.size()));
  }
  return file;
}

}  // namespace hyperwalk
