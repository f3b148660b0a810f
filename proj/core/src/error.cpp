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

#include "hyperwalk/error.hpp"

namespace hyperwalk {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty_input: return "EmptyInput";
    case Errc::hyperedge_too_small: return "HyperedgeTooSmall";
    case Errc::duplicate_member: return "DuplicateMember";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::unknown_node: return "UnknownNode";
    case Errc::unknown_hyperedge: return "UnknownHyperedge";
    case Errc::not_incident: return "NotIncident";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::sequence_too_short: return "SequenceTooShort";
    case Errc::empty_sample: return "EmptySample";
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::missing_category: return "MissingCategory";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::insufficient_visits: return "InsufficientVisits";
    case Errc::too_large: return "TooLarge";
    case Errc::zero_truth: return "ZeroTruth";
    case Errc::infeasible_parameters: return "InfeasibleParameters";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::remote_failure: return "RemoteFailure";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hyperwalk
