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

#include <filesystem>
#include <iosfwd>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk {

struct ReadOptions {
  // Published corpora often contain single-member hyperedges and repeated
  // members; with this set they are dropped/merged instead of rejected.
  bool sanitize = false;
};

/// One hyperedge per line, whitespace-separated node labels. Blank lines and
/// lines starting with '#' are skipped.
Hypergraph read_hyperedge_list(std::istream& in, const ReadOptions& options = {});
Hypergraph read_hyperedge_list(const std::filesystem::path& path, const ReadOptions& options = {});

/// Two-file corpus layout: line k of `sizes` holds the size of hyperedge k and
/// `members` lists all member labels in order (whitespace or newline separated).
Hypergraph read_sizes_members(std::istream& sizes, std::istream& members,
                              const ReadOptions& options = {});
Hypergraph read_sizes_members(const std::filesystem::path& sizes,
                              const std::filesystem::path& members,
                              const ReadOptions& options = {});

/// Canonical hyperedge-list form: hyperedges in index order, members in
/// ascending node index, labels separated by single spaces.
void write_hyperedge_list(std::ostream& out, const Hypergraph& h);

/// Rewrites the two-file layout as a hyperedge list without building a
/// Hypergraph (no validation beyond count consistency).
void convert_sizes_members(std::istream& sizes, std::istream& members, std::ostream& out);

}  // namespace hyperwalk
