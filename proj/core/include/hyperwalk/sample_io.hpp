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

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperwalk/oracle.hpp"
#include "hyperwalk/walk.hpp"

namespace hyperwalk {

/// A sample sequence read back from disk. Step ids index into the two label
/// tables, which are numbered in order of first appearance in the trace.
struct SampleFile {
  WalkConfig config;
  SampleSequence sequence;
  std::vector<std::string> node_labels;
  std::vector<std::string> hyperedge_labels;
};

/// Line 1 is a compact JSON header (config echo, stats, truncated flag and
/// the observed degree/size of every label). Each following line is
/// `k X_label Y_label` with k counting from 1.
void write_sample(std::ostream& out, const SampleSequence& seq, const WalkConfig& config,
                  const QueryOracle& labels);

/// Throws ParseError on malformed input.
SampleFile read_sample(std::istream& in);

}  // namespace hyperwalk
