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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperwalk {

enum class Errc {
  empty_input,
  hyperedge_too_small,
  duplicate_member,
  index_out_of_range,
  unknown_node,
  unknown_hyperedge,
  not_incident,
  budget_exhausted,
  sequence_too_short,
  empty_sample,
  zero_denominator,
  missing_category,
  no_convergence,
  insufficient_visits,
  too_large,
  zero_truth,
  infeasible_parameters,
  invalid_argument,
  parse_error,
  io_error,
  remote_failure,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hyperwalk
