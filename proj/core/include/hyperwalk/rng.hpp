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
#include <random>

namespace hyperwalk {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seedable generator used by every sampler in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded and real draws are derived here rather than through
/// <random> distributions (those are implementation-defined), so a trace is
/// reproducible across standard libraries and in other languages:
///
///   uniform_index(n): Lemire multiply-shift with rejection on the low word.
///   uniform01():      (next() >> 11) * 2^-53.
///   substream(s, k):  engine seeded with splitmix64(s + (k + 1) * 0x9E3779B97F4A7C15).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t master_seed, std::uint64_t index) noexcept;

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). Requires n > 0.
  std::size_t uniform_index(std::size_t n);

  /// Uniform real in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperwalk
