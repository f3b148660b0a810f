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

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "hyperwalk/generator.hpp"
#include "hyperwalk/harness.hpp"
#include "reference.hpp"

namespace hyperwalk {
namespace {

using testing::error_code_of;

TEST(GroundTruth, TriangleWithPendant) {
  auto t = ground_truth(Hypergraph::build({{1, 2, 3}, {2, 3}}));
  EXPECT_EQ(t.nodes, 3u);
  EXPECT_EQ(t.hyperedges, 2u);
  EXPECT_DOUBLE_EQ(t.mean_degree, 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.mean_size, 2.5);
  EXPECT_EQ(t.max_degree, 2u);
  EXPECT_EQ(t.max_size, 3u);
  EXPECT_DOUBLE_EQ(t.degree_one_fraction, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.degree_pmf.at(1), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.degree_pmf.at(2), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.size_pmf.at(2), 0.5);
  EXPECT_DOUBLE_EQ(t.degree_ccdf.at(1), 1.0);
  EXPECT_DOUBLE_EQ(t.degree_ccdf.at(2), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.size_ccdf.at(3), 0.5);
}

TEST(Metrics, RelativeErrorAndL1) {
  EXPECT_NEAR(relative_error(1.1, 1.0), 0.1, 1e-12);
  EXPECT_DOUBLE_EQ(relative_error(-1.0, 2.0), 1.5);
  EXPECT_EQ(error_code_of([] { relative_error(1.0, 0.0); }), Errc::zero_truth);
  Distribution p{{1, 0.5}, {2, 0.5}}, q{{2, 0.75}, {3, 0.25}};
  EXPECT_DOUBLE_EQ(l1_distance(p, q), 0.5 + 0.25 + 0.25);
  EXPECT_DOUBLE_EQ(l1_distance(p, p), 0.0);
}

TEST(Metrics, NrmseIsRootMeanSquare) {
  const std::vector<double> errors{3.0, 4.0};
  EXPECT_DOUBLE_EQ(nrmse(errors), std::sqrt(12.5));
  EXPECT_EQ(error_code_of([] { nrmse({}); }), Errc::empty_sample);
}

TEST(ExperimentSpec, ParseFormatRoundTrip) {
  std::istringstream in(
      "# comment\n"
      "dataset = data/x.txt\n"
      "walks=ho-rw,nb-ho-rw,p-rw\n"
      "lengths=10,100\n"
      "runs=25\n"
      "metrics=mean-degree,size-pmf\n"
      "seed=9\n"
      "burn_in=3\n"
      "threads=2\n"
      "keep_errors=true\n");
  auto spec = parse_experiment_spec(in);
  EXPECT_EQ(spec.dataset, "data/x.txt");
  EXPECT_EQ(spec.walks.size(), 3u);
  EXPECT_EQ(spec.lengths, (std::vector<std::size_t>{10, 100}));
  EXPECT_EQ(spec.runs, 25u);
  EXPECT_EQ(spec.metrics, (std::vector<Metric>{Metric::mean_degree, Metric::size_pmf}));
  EXPECT_EQ(spec.master_seed, 9u);
  EXPECT_EQ(spec.burn_in, 3u);
  EXPECT_EQ(spec.threads, 2u);
  EXPECT_TRUE(spec.keep_errors);

  std::istringstream again(format_experiment_spec(spec));
  auto spec2 = parse_experiment_spec(again);
  EXPECT_EQ(format_experiment_spec(spec2), format_experiment_spec(spec));
}

TEST(ExperimentSpec, RejectsBadInput) {
  auto parse = [](const std::string& text) {
    return error_code_of([&] {
      std::istringstream in(text);
      parse_experiment_spec(in);
    });
  };
  EXPECT_EQ(parse("colour=blue\n"), Errc::parse_error);
  EXPECT_EQ(parse("runs\n"), Errc::parse_error);
  EXPECT_EQ(parse("keep_errors=maybe\n"), Errc::parse_error);
  ExperimentSpec spec;
  spec.lengths = {100, 10};
  EXPECT_EQ(error_code_of([&] { spec.validate(); }), Errc::invalid_argument);
  spec.lengths = {10, 100};
  spec.burn_in = 10;
  EXPECT_EQ(error_code_of([&] { spec.validate(); }), Errc::invalid_argument);
}

ExperimentSpec small_spec() {
  ExperimentSpec spec;
  spec.dataset = "unit";
  spec.walks = {WalkKind::higher_order, WalkKind::non_backtracking};
  spec.lengths = {50, 800};
  spec.runs = 60;
  spec.master_seed = 4;
  return spec;
}

Hypergraph small_corpus() {
  GeneratorParams p;
  p.nodes = 60;
  p.hyperedges = 50;
  p.sizes = SizeLaw{2, 4, {}};
  p.degree_skew = 0.8;
  p.seed = 3;
  return generate_random_hypergraph(p);
}

TEST(Nrmse, ResultIndependentOfThreadCount) {
  auto h = small_corpus();
  auto spec = small_spec();
  spec.threads = 1;
  auto a = run_nrmse_experiment(h, spec);
  spec.threads = 3;
  auto b = run_nrmse_experiment(h, spec);
  ASSERT_EQ(a.summary.size(), b.summary.size());
  for (std::size_t i = 0; i < a.summary.size(); ++i) {
    EXPECT_EQ(a.summary[i].nrmse, b.summary[i].nrmse);
  }
  EXPECT_EQ(a.seed_nodes, b.seed_nodes);
  EXPECT_EQ(a.seed_nodes.size(), spec.runs);
  EXPECT_EQ(a.summary.size(), spec.walks.size() * spec.lengths.size() * spec.metrics.size());
}

TEST(Nrmse, ShrinksWithLongerWalks) {
  auto h = small_corpus();
  auto spec = small_spec();
  spec.keep_errors = true;
  auto result = run_nrmse_experiment(h, spec);
  for (const auto& short_run : result.summary) {
    if (short_run.length != 50) continue;
    EXPECT_EQ(short_run.errors.size(), spec.runs);
    for (const auto& long_run : result.summary) {
      if (long_run.length == 800 && long_run.walk == short_run.walk &&
          long_run.metric == short_run.metric) {
        EXPECT_LT(long_run.nrmse, short_run.nrmse);
      }
    }
  }
  for (const auto& v : result.per_value) {
    EXPECT_GT(v.truth, 0.0);
    EXPECT_GE(v.nrmse, 0.0);
  }
}

TEST(QueryComparison, CountsFollowWalkDiscipline) {
  auto h = small_corpus();
  auto spec = small_spec();
  spec.walks = {WalkKind::projected, WalkKind::higher_order, WalkKind::non_backtracking};
  spec.runs = 20;
  auto rows = compare_queries_and_repetition(h, spec);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& row : rows) {
    const auto r = static_cast<double>(row.length);
    EXPECT_DOUBLE_EQ(row.mean_node_queries, r);
    if (row.walk == WalkKind::projected) {
      EXPECT_DOUBLE_EQ(row.mean_hyperedge_queries, row.mean_degree_sum);
      EXPECT_GT(row.mean_hyperedge_queries, r);
    } else {
      EXPECT_DOUBLE_EQ(row.mean_hyperedge_queries, r);
    }
    EXPECT_DOUBLE_EQ(row.mean_node_repetition, 0.0);
  }
}

TEST(Csv, HeadersAndRowCounts) {
  auto h = small_corpus();
  auto spec = small_spec();
  spec.runs = 5;
  auto result = run_nrmse_experiment(h, spec);
  std::ostringstream out;
  write_nrmse_csv(out, spec, result.summary);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "dataset,walk,r,metric,nrmse,runs");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, result.summary.size());
}

TEST(Generator, ExactCountsConnectedAndDeterministic) {
  GeneratorParams p;
  p.nodes = 500;
  p.hyperedges = 400;
  p.sizes = SizeLaw{2, 5, {4, 3, 2, 1}};
  p.degree_skew = 1.0;
  p.seed = 17;
  auto a = generate_random_hypergraph(p);
  auto b = generate_random_hypergraph(p);
  EXPECT_EQ(a.node_count(), 500u);
  EXPECT_EQ(a.hyperedge_count(), 400u);
  EXPECT_TRUE(is_connected(a));
  for (EdgeId e = 0; e < a.hyperedge_count(); ++e) {
    EXPECT_GE(a.size(e), 2u);
    EXPECT_LE(a.size(e), 5u);
  }
  std::ostringstream sa, sb;
  for (EdgeId e = 0; e < a.hyperedge_count(); ++e) {
    for (auto v : a.members(e)) sa << a.node_label(v) << ' ';
    for (auto v : b.members(e)) sb << b.node_label(v) << ' ';
  }
  EXPECT_EQ(sa.str(), sb.str());
}

TEST(Generator, SmallCorporaAreConnectedForManySeeds) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorParams p;
    p.nodes = 12;
    p.hyperedges = 15;
    p.seed = seed;
    auto h = generate_random_hypergraph(p);
    EXPECT_TRUE(testing::brute_force_connected(h));
    EXPECT_EQ(h.node_count(), 12u);
  }
}

TEST(Generator, RejectsInfeasibleParameters) {
  GeneratorParams too_few;
  too_few.nodes = 50;
  too_few.hyperedges = 5;  // five pairs cover at most six nodes
  too_few.sizes = SizeLaw{2, 2, {}};
  EXPECT_EQ(error_code_of([&] { generate_random_hypergraph(too_few); }),
            Errc::infeasible_parameters);
  GeneratorParams bad_sizes;
  bad_sizes.sizes = SizeLaw{1, 3, {}};
  EXPECT_EQ(error_code_of([&] { generate_random_hypergraph(bad_sizes); }),
            Errc::infeasible_parameters);
  GeneratorParams bad_skew;
  bad_skew.degree_skew = -1;
  EXPECT_EQ(error_code_of([&] { generate_random_hypergraph(bad_skew); }),
            Errc::infeasible_parameters);
}

}  // namespace
}  // namespace hyperwalk
