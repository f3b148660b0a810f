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

namespace hyperwalk::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kTruncated = 2,
  kDegenerate = 3,
  kUsage = 64,
  kData = 65,
  kUnavailable = 69,
};

/// Runs the command line `args` (program name excluded), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hyperwalk::cli
