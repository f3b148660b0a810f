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

#include "hyperwalk/report.hpp"

#include <ostream>

#include "json.hpp"

namespace hyperwalk {

using json = nlohmann::ordered_json;

namespace {

json config_json(const WalkConfig& config) {
  return {{"walk", to_string(config.kind)},
          {"length", config.length},
          {"seed_node", config.seed_node},
          {"rng_seed", config.rng_seed},
          {"sample_burn_in", config.burn_in}};
}

json distribution_array(const Distribution& d) {
  json points = json::array();
  for (const auto& [value, p] : d) points.push_back({{"value", value}, {"probability", p}});
  return points;
}

}  // namespace

std::string to_json(const EstimateReport& report, std::string_view property,
                    const WalkConfig& config) {
  json out = {{"property", property},
              {"estimate", report.estimate},
              {"phi", report.phi},
              {"psi", report.psi},
              {"samples", report.samples},
              {"burn_in", report.burn_in},
              {"config", config_json(config)}};
  return out.dump(2);
}

std::string to_json(const Distribution& distribution, std::string_view property,
                    const WalkConfig& config, std::size_t samples, std::size_t burn_in) {
  json out = {{"property", property},
              {"distribution", distribution_array(distribution)},
              {"samples", samples},
              {"burn_in", burn_in},
              {"config", config_json(config)}};
  return out.dump(2);
}

std::string to_json(const std::map<std::string, double>& composition, std::string_view property,
                    const WalkConfig& config, std::size_t samples, std::size_t burn_in) {
  json shares = json::object();
  for (const auto& [label, p] : composition) shares[label] = p;
  json out = {{"property", property},
              {"composition", std::move(shares)},
              {"samples", samples},
              {"burn_in", burn_in},
              {"config", config_json(config)}};
  return out.dump(2);
}

std::string to_json(const NbChainReport& report) {
  json out = {{"connected", report.connected},
              {"evaluated", report.evaluated},
              {"states", report.states},
              {"column_sum_max_dev", report.column_sum_max_dev},
              {"row_sum_max_dev", report.row_sum_max_dev},
              {"stationarity_residual", report.stationarity_residual},
              {"irreducible", report.irreducible},
              {"period", report.period},
              {"aperiodic", report.period == 1},
              {"passed", report.passed}};
  return out.dump(2);
}

std::string to_json(const GroundTruth& truth) {
  json out = {{"n", truth.nodes},
              {"m", truth.hyperedges},
              {"mean_degree", truth.mean_degree},
              {"max_degree", truth.max_degree},
              {"p_degree_one", truth.degree_one_fraction},
              {"mean_size", truth.mean_size},
              {"max_size", truth.max_size}};
  return out.dump(2);
}

void write_distribution_csv(std::ostream& out, const Distribution& distribution) {
  const auto precision = out.precision(17);
  out << "value,probability\n";
  for (const auto& [value, p] : distribution) out << value << ',' << p << '\n';
  out.precision(precision);
}

}  // namespace hyperwalk
