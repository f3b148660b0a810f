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
#include <vector>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk {

/// Hyperedge sizes drawn from [min_size, max_size], uniformly or with the
/// given relative weights (one per size, in order).
struct SizeLaw {
  std::size_t min_size = 2;
  std::size_t max_size = 3;
  std::vector<double> weights;
};

struct GeneratorParams {
  std::size_t nodes = 10;
  std::size_t hyperedges = 15;
  SizeLaw sizes;
  // Node i (in order of introduction) is picked with weight (i + 1)^-skew.
  // 0 gives uniform picks; around 1 gives a heavy-tailed degree sequence
  // with many degree-1 nodes.
  double degree_skew = 0.0;
  std::uint64_t seed = 0;
};

/// Connected hypergraph with exactly `nodes` nodes and `hyperedges`
/// hyperedges. Early hyperedges grow a spanning structure (each one shares a
/// popularity-weighted node with what exists and introduces new nodes);
/// once every node exists the rest pick members by popularity. Sizes are
/// redrawn until they can cover all nodes. Node labels are "0".."n-1".
///
/// Throws InfeasibleParameters.
Hypergraph generate_random_hypergraph(const GeneratorParams& params);

}  // namespace hyperwalk
