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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperwalk/estimators.hpp"
#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/walk.hpp"

namespace hyperwalk {

/// Exact properties of a fully known hypergraph, by enumeration.
struct GroundTruth {
  std::size_t nodes = 0;
  std::size_t hyperedges = 0;
  double mean_degree = 0.0;
  double mean_size = 0.0;
  std::size_t max_degree = 0;
  std::size_t max_size = 0;
  double degree_one_fraction = 0.0;
  Distribution degree_pmf;
  Distribution size_pmf;
  Distribution degree_ccdf;
  Distribution size_ccdf;
};

GroundTruth ground_truth(const Hypergraph& h);

/// |estimate - truth| / |truth|. Throws ZeroTruth.
double relative_error(double estimate, double truth);
/// Sum of |p - q| over the union of both supports.
double l1_distance(const Distribution& p, const Distribution& q);

enum class Metric { mean_degree, mean_size, degree_pmf, size_pmf };

/// "mean-degree", "mean-size", "degree-pmf", "size-pmf".
std::string_view to_string(Metric metric) noexcept;
Metric parse_metric(std::string_view name);

struct ExperimentSpec {
  std::string dataset;
  std::vector<WalkKind> walks{WalkKind::higher_order, WalkKind::non_backtracking};
  std::vector<std::size_t> lengths{100, 1000, 10000};
  std::size_t runs = 1000;
  std::vector<Metric> metrics{Metric::mean_degree, Metric::mean_size, Metric::degree_pmf,
                              Metric::size_pmf};
  std::uint64_t master_seed = 1;
  std::size_t burn_in = 0;
  // 0 means one worker per hardware thread.
  unsigned threads = 0;
  bool keep_errors = false;

  /// Throws InvalidArgument (runs >= 1, ascending positive lengths, at
  /// least one walk and metric, burn-in below the shortest length).
  void validate() const;
};

/// key=value lines; '#' starts a comment. Keys: dataset, walks, lengths,
/// runs, metrics, seed, burn_in, threads, keep_errors. Lists are
/// comma-separated. Unknown keys are a ParseError.
ExperimentSpec parse_experiment_spec(std::istream& in);
std::string format_experiment_spec(const ExperimentSpec& spec);

/// sqrt(mean(e^2)).
double nrmse(std::span<const double> errors);

struct NrmseResult {
  WalkKind walk;
  std::size_t length;
  Metric metric;
  double nrmse;
  std::size_t runs;
  std::vector<double> errors;  // filled when spec.keep_errors
};

/// NRMSE of the single-value estimate P(d = value) or P(s = value), with
/// relative error against the true probability.
struct ValueNrmse {
  WalkKind walk;
  std::size_t length;
  DistributionKind kind;
  std::size_t value;
  double truth;
  double nrmse;
};

struct ExperimentResult {
  std::vector<NrmseResult> summary;
  std::vector<ValueNrmse> per_value;
  // Seed node drawn for each run (shared by every walk and length).
  std::vector<NodeId> seed_nodes;
};

/// For run k, generator substream k first draws a uniform seed node, then
/// every (walk, length) pair walks from that node with a copy of the same
/// stream. Runs are spread over threads and folded in run order, so the
/// result does not depend on scheduling.
ExperimentResult run_nrmse_experiment(const Hypergraph& h, const ExperimentSpec& spec);

struct QueryRepetitionRow {
  WalkKind walk;
  std::size_t length;
  std::size_t runs;
  double mean_node_queries;
  double mean_hyperedge_queries;
  // Mean of sum_k d_{X_k} along the walk.
  double mean_degree_sum;
  double mean_hyperedge_repetition;
  double mean_node_repetition;
};

/// Same run protocol as run_nrmse_experiment; lengths below 2 report a
/// repetition rate of 0.
std::vector<QueryRepetitionRow> compare_queries_and_repetition(const Hypergraph& h,
                                                               const ExperimentSpec& spec);

/// dataset,walk,r,metric,nrmse,runs
void write_nrmse_csv(std::ostream& out, const ExperimentSpec& spec,
                     std::span<const NrmseResult> results);
/// dataset,walk,r,kind,value,truth,nrmse
void write_value_nrmse_csv(std::ostream& out, const ExperimentSpec& spec,
                           std::span<const ValueNrmse> results);
/// dataset,walk,r,runs,node_queries,hyperedge_queries,degree_sum,hyperedge_repetition,node_repetition
void write_query_csv(std::ostream& out, const ExperimentSpec& spec,
                     std::span<const QueryRepetitionRow> rows);

}  // namespace hyperwalk
