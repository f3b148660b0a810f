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
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "hyperwalk/estimators.hpp"
#include "hyperwalk/harness.hpp"
#include "hyperwalk/markov.hpp"
#include "hyperwalk/walk.hpp"

namespace hyperwalk {

// JSON renderings used by the CLI. Numbers are written with round-trip
// precision.

std::string to_json(const EstimateReport& report, std::string_view property,
                    const WalkConfig& config);
std::string to_json(const Distribution& distribution, std::string_view property,
                    const WalkConfig& config, std::size_t samples, std::size_t burn_in);
std::string to_json(const std::map<std::string, double>& composition, std::string_view property,
                    const WalkConfig& config, std::size_t samples, std::size_t burn_in);
std::string to_json(const NbChainReport& report);
std::string to_json(const GroundTruth& truth);

/// value,probability
void write_distribution_csv(std::ostream& out, const Distribution& distribution);

}  // namespace hyperwalk
