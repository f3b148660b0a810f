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

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "hyperwalk/sample_io.hpp"
#include "json.hpp"
#include "mock_server.hpp"

namespace hyperwalk {
namespace {

using nlohmann::json;
using testing::data_path;
using testing::TempDir;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kTri = data_path("tri.txt").string();

TEST(Cli, StatsPrintsRoundedSummary) {
  auto r = run({"stats", "--input", kTri});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out,
            "n 3\nm 2\nmean_degree 1.667\nmax_degree 2\np_degree_one 0.333\n"
            "mean_size 2.500\nmax_size 3\n");
  auto j = run({"stats", "--input", kTri, "--json"});
  EXPECT_DOUBLE_EQ(json::parse(j.out)["mean_degree"].get<double>(), 5.0 / 3.0);
}

TEST(Cli, StatsUsesLargestComponentUnlessAsked) {
  const auto two = data_path("two_components.txt").string();
  auto lcc = run({"stats", "--input", two});
  EXPECT_NE(lcc.out.find("n 4\n"), std::string::npos);
  EXPECT_NE(lcc.err.find("largest connected component"), std::string::npos);
  auto all = run({"stats", "--input", two, "--no-lcc"});
  EXPECT_NE(all.out.find("n 6\n"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"stats"}).code, cli::kUsage);
  EXPECT_EQ(run({"stats", "--input", kTri, "--sizes", kTri}).code, cli::kUsage);
  EXPECT_EQ(run({"sample", "--input", kTri, "--length", "0", "-o", "x"}).code, cli::kUsage);
  EXPECT_EQ(run({"sample", "--input", kTri, "--length", "5", "--walk", "lazy", "-o", "x"}).code,
            cli::kUsage);
  EXPECT_EQ(run({"sample", "--input", kTri, "--length", "5", "--burn-in", "5", "-o", "x"}).code,
            cli::kUsage);
  EXPECT_EQ(run({"stats", "--help"}).code, cli::kOk);
}

TEST(Cli, DataErrors) {
  EXPECT_EQ(run({"stats", "--input", data_path("missing.txt").string()}).code, cli::kData);
  EXPECT_EQ(run({"stats", "--input", data_path("dirty.txt").string()}).code, cli::kData);
  EXPECT_EQ(run({"stats", "--input", data_path("dirty.txt").string(), "--sanitize"}).code,
            cli::kOk);
}

TEST(Cli, SampleThenEstimate) {
  TempDir tmp;
  const auto sample = (tmp / "s.txt").string();
  auto s = run({"sample", "--input", kTri, "--walk", "nb-ho-rw", "--length", "20000",
                "--seed-node", "1", "--rng-seed", "5", "--burn-in", "100", "-o", sample});
  ASSERT_EQ(s.code, cli::kOk) << s.err;
  auto stats = json::parse(s.out);
  EXPECT_EQ(stats["node_queries"], 20000);
  EXPECT_EQ(stats["hyperedge_queries"], 20000);
  EXPECT_EQ(stats["truncated"], false);

  auto deg = run({"estimate", "--sample", sample, "--property", "avg-degree"});
  ASSERT_EQ(deg.code, cli::kOk) << deg.err;
  auto d = json::parse(deg.out);
  EXPECT_NEAR(d["estimate"].get<double>(), 5.0 / 3.0, 0.05);
  EXPECT_EQ(d["burn_in"], 100);
  EXPECT_EQ(d["samples"], 19900);

  auto pmf = run({"estimate", "--sample", sample, "--property", "size-pmf", "--format", "csv"});
  ASSERT_EQ(pmf.code, cli::kOk);
  EXPECT_EQ(pmf.out.rfind("value,probability\n2,", 0), 0u);

  auto preset = run({"estimate", "--sample", sample, "--property", "avg-size", "--preset",
                     "openalex"});
  EXPECT_EQ(json::parse(preset.out)["burn_in"], 5000);
}

TEST(Cli, SampleIsReproducibleFromPrintedSeed) {
  TempDir tmp;
  auto a = run({"sample", "--input", kTri, "--length", "300", "-o", (tmp / "a").string()});
  ASSERT_EQ(a.code, cli::kOk);
  auto seed_at = a.err.find("rng_seed=");
  ASSERT_NE(seed_at, std::string::npos);
  const auto seed = a.err.substr(seed_at + 9, a.err.find('\n', seed_at) - seed_at - 9);
  auto seed_node = json::parse(a.out)["seed_node"].get<std::string>();
  auto b = run({"sample", "--input", kTri, "--length", "300", "--rng-seed", seed, "--seed-node",
                seed_node, "-o", (tmp / "b").string()});
  ASSERT_EQ(b.code, cli::kOk);
  EXPECT_EQ(slurp(tmp / "a"), slurp(tmp / "b"));
}

TEST(Cli, TruncatedSampleExitsWithTwo) {
  TempDir tmp;
  auto r = run({"sample", "--input", kTri, "--length", "100", "--rng-seed", "1",
                "--max-node-queries", "10", "-o", (tmp / "s").string()});
  EXPECT_EQ(r.code, cli::kTruncated);
  EXPECT_EQ(json::parse(r.out)["steps"], 10);
}

TEST(Cli, DegenerateEstimatesExitWithThree) {
  TempDir tmp;
  const auto sample = (tmp / "s").string();
  run({"sample", "--input", kTri, "--length", "50", "--rng-seed", "1", "-o", sample});
  auto empty = run({"estimate", "--sample", sample, "--property", "avg-degree", "--burn-in", "50"});
  EXPECT_EQ(empty.code, cli::kDegenerate);
  std::ofstream(tmp / "subset") << "nobody\n";
  auto zero = run({"estimate", "--sample", sample, "--property", "avg-degree", "--subset-file",
                   (tmp / "subset").string()});
  EXPECT_EQ(zero.code, cli::kDegenerate);
}

TEST(Cli, SubsetAndComposition) {
  TempDir tmp;
  const auto sample = (tmp / "s").string();
  run({"sample", "--input", kTri, "--length", "2000", "--rng-seed", "2", "-o", sample});
  std::ofstream(tmp / "subset") << "2\n3\n";
  auto sub = run({"estimate", "--sample", sample, "--property", "avg-degree", "--subset-file",
                  (tmp / "subset").string()});
  ASSERT_EQ(sub.code, cli::kOk) << sub.err;
  EXPECT_DOUBLE_EQ(json::parse(sub.out)["estimate"].get<double>(), 2.0);

  std::ofstream(tmp / "attrs") << "1 red\n2 blue\n3 blue\n";
  auto comp = run({"estimate", "--sample", sample, "--property", "composition", "--kind", "node",
                   "--attributes-file", (tmp / "attrs").string()});
  ASSERT_EQ(comp.code, cli::kOk) << comp.err;
  auto j = json::parse(comp.out);
  EXPECT_NEAR(j["composition"]["red"].get<double>(), 1.0 / 3.0, 0.05);
  EXPECT_NEAR(j["composition"]["red"].get<double>() + j["composition"]["blue"].get<double>(), 1.0, 1e-12);

  std::ofstream(tmp / "partial") << "1 red\n";
  auto missing = run({"estimate", "--sample", sample, "--property", "composition", "--kind",
                      "node", "--attributes-file", (tmp / "partial").string()});
  EXPECT_EQ(missing.code, cli::kData);
}

TEST(Cli, VerifyReportsPeriodicPath) {
  auto r = run({"verify", "--input", data_path("path.txt").string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["period"], 4);
  EXPECT_EQ(j["aperiodic"], false);
  EXPECT_EQ(j["passed"], true);
  EXPECT_LE(j["stationarity_residual"].get<double>(), 1e-12);
}

TEST(Cli, VerifyFailsOnDisconnectedInput) {
  auto r = run({"verify", "--input", data_path("two_components.txt").string()});
  EXPECT_EQ(r.code, cli::kVerifyFailed);
  EXPECT_EQ(json::parse(r.out)["connected"], false);
  auto lcc = run({"verify", "--input", data_path("two_components.txt").string(), "--lcc"});
  EXPECT_EQ(lcc.code, cli::kOk);
}

TEST(Cli, VerifyDumpsMatrix) {
  TempDir tmp;
  auto r = run({"verify", "--input", kTri, "--dump-matrix", (tmp / "m").string()});
  ASSERT_EQ(r.code, cli::kOk);
  auto text = slurp(tmp / "m");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 8);
}

TEST(Cli, ConvertWritesCanonicalList) {
  auto r = run({"convert", "--sizes", data_path("tri_sizes.txt").string(), "--members",
                data_path("tri_members.txt").string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "1 2 3\n2 3\n7 9\n");
}

TEST(Cli, NrmseWritesCsvWithEchoedConfig) {
  TempDir tmp;
  std::ofstream(tmp / "exp.cfg") << "walks=ho-rw,nb-ho-rw\nlengths=20,200\nruns=30\nseed=3\n";
  auto r = run({"nrmse", "--input", kTri, "--config", (tmp / "exp.cfg").string(), "--runs", "10",
                "--metrics", "mean-degree", "--queries-output", (tmp / "q.csv").string(),
                "--per-value-output", (tmp / "v.csv").string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("# runs=10\n"), std::string::npos);
  EXPECT_NE(r.out.find("dataset,walk,r,metric,nrmse,runs\n"), std::string::npos);
  std::size_t data_rows = 0;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) data_rows += line.find(",mean-degree,") != std::string::npos;
  EXPECT_EQ(data_rows, 4u);
  EXPECT_FALSE(slurp(tmp / "q.csv").empty());
  EXPECT_FALSE(slurp(tmp / "v.csv").empty());
}

TEST(Cli, RemoteSampleMatchesLocalSample) {
  auto h = Hypergraph::build({{1, 2, 3}, {2, 3}});
  testing::MockLineServer server(h);
  TempDir tmp;
  auto local = run({"sample", "--input", kTri, "--length", "500", "--seed-node", "2",
                    "--rng-seed", "8", "-o", (tmp / "local").string()});
  auto remote = run({"sample", "--endpoint", server.endpoint(), "--length", "500", "--seed-node",
                     "2", "--rng-seed", "8", "-o", (tmp / "remote").string()});
  ASSERT_EQ(local.code, cli::kOk) << local.err;
  ASSERT_EQ(remote.code, cli::kOk) << remote.err;
  EXPECT_EQ(slurp(tmp / "local"), slurp(tmp / "remote"));
  EXPECT_EQ(local.out, remote.out);
}

TEST(Cli, RemoteNeedsSeedAndReportsUnavailable) {
  TempDir tmp;
  EXPECT_EQ(run({"sample", "--endpoint", "127.0.0.1:9", "--length", "5", "-o",
                 (tmp / "s").string()})
                .code,
            cli::kUsage);
  std::uint16_t port;
  {
    auto h = Hypergraph::build({{1, 2}});
    testing::MockLineServer gone(h);
    port = gone.port();
  }
  auto r = run({"sample", "--endpoint", "127.0.0.1:" + std::to_string(port), "--seed-node", "1",
                "--length", "5", "--retries", "0", "--timeout-ms", "200", "-o",
                (tmp / "s").string()});
  EXPECT_EQ(r.code, cli::kUnavailable);
}

}  // namespace
}  // namespace hyperwalk
