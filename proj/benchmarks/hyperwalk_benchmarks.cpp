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

#include <benchmark/benchmark.h>

#include "hyperwalk/estimators.hpp"
#include "hyperwalk/generator.hpp"
#include "hyperwalk/markov.hpp"
#include "hyperwalk/walk.hpp"

namespace hw = hyperwalk;

namespace {

const hw::Hypergraph& corpus() {
  static const hw::Hypergraph h = [] {
    hw::GeneratorParams p;
    p.nodes = 10'000;
    p.hyperedges = 16'000;
    p.sizes = hw::SizeLaw{2, 6, {4, 4, 3, 2, 1}};
    p.degree_skew = 1.1;
    p.seed = 1;
    return hw::generate_random_hypergraph(p);
  }();
  return h;
}

void BM_Walk(benchmark::State& state) {
  const auto kind = hw::kAllWalkKinds[static_cast<std::size_t>(state.range(0))];
  const auto length = static_cast<std::size_t>(state.range(1));
  const auto& h = corpus();
  hw::Rng rng(1);
  for (auto _ : state) {
    hw::InMemoryOracle oracle(h);
    auto seq = hw::walk_from(oracle, kind, 0, length, rng);
    benchmark::DoNotOptimize(seq.steps.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(std::string(hw::to_string(kind)));
}
BENCHMARK(BM_Walk)->ArgsProduct({{0, 1, 2, 3}, {10'000}});

void BM_EstimateMeanDegree(benchmark::State& state) {
  hw::InMemoryOracle oracle(corpus());
  hw::Rng rng(2);
  auto seq = hw::walk_from(oracle, hw::WalkKind::non_backtracking, 0,
                           static_cast<std::size_t>(state.range(0)), rng);
  const auto f = hw::features::degree();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hw::estimate_node(seq.steps, f).estimate);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateMeanDegree)->Arg(100'000);

void BM_DegreePmf(benchmark::State& state) {
  hw::InMemoryOracle oracle(corpus());
  hw::Rng rng(3);
  auto seq = hw::walk_from(oracle, hw::WalkKind::non_backtracking, 0,
                           static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    auto pmf = hw::estimate_distribution(seq.steps, hw::DistributionKind::degree,
                                         hw::DistributionMode::pmf);
    benchmark::DoNotOptimize(pmf.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DegreePmf)->Arg(100'000);

void BM_BuildNbMatrix(benchmark::State& state) {
  hw::GeneratorParams p;
  p.nodes = static_cast<std::size_t>(state.range(0));
  p.hyperedges = p.nodes * 3 / 2;
  p.sizes = hw::SizeLaw{2, 5, {}};
  p.seed = 4;
  const auto h = hw::generate_random_hypergraph(p);
  for (auto _ : state) {
    auto chain = hw::build_nb_ho_matrix(h);
    benchmark::DoNotOptimize(chain.transitions.nonZeros());
  }
  state.counters["states"] = static_cast<double>(h.incidence_count());
}
BENCHMARK(BM_BuildNbMatrix)->Arg(100)->Arg(1'000)->Arg(10'000);

void BM_VerifyNb(benchmark::State& state) {
  hw::GeneratorParams p;
  p.nodes = static_cast<std::size_t>(state.range(0));
  p.hyperedges = p.nodes * 3 / 2;
  p.sizes = hw::SizeLaw{2, 5, {}};
  p.seed = 5;
  const auto h = hw::generate_random_hypergraph(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hw::verify_nb_stationarity(h).passed);
  }
}
BENCHMARK(BM_VerifyNb)->Arg(100)->Arg(1'000);

}  // namespace
BENCHMARK_MAIN();
