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

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/walk.hpp"

namespace hyperwalk {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Exact analysis is desk-scale only.
inline constexpr std::size_t kMaxAnalysisStates = 1'000'000;
/// Up to this many states the stationary solver may fall back to a dense
/// direct solve.
inline constexpr std::size_t kDenseSolveLimit = 2000;

struct IncidencePair {
  NodeId node;
  EdgeId hyperedge;

  friend bool operator==(const IncidencePair&, const IncidencePair&) = default;
};

/// All incident (node, hyperedge) pairs in lexicographic order.
class StateSpace {
 public:
  explicit StateSpace(const Hypergraph& h);

  std::size_t size() const noexcept { return pairs_.size(); }
  const IncidencePair& operator[](std::size_t index) const { return pairs_[index]; }
  std::span<const IncidencePair> pairs() const noexcept { return pairs_; }

  /// Throws NotIncident.
  std::size_t index_of(NodeId node, EdgeId hyperedge) const;

 private:
  std::vector<IncidencePair> pairs_;
  std::vector<std::size_t> node_offsets_;
};

struct ChainMatrix {
  StateSpace states;
  SparseMatrix transitions;
};

/// Transition matrix of NB-HO-RW on incidence pairs: from (i, a) the walk
/// moves to j uniform in a \ {i}, then to a hyperedge of j other than a
/// (or back to a when j has degree 1). Throws TooLarge above
/// kMaxAnalysisStates.
ChainMatrix build_nb_ho_matrix(const Hypergraph& h);

/// Node-to-node transition matrix of P-RW, C-RW or HO-RW from the closed
/// forms. NB-HO-RW has no node-level Markov matrix (InvalidArgument).
SparseMatrix build_node_matrix(const Hypergraph& h, WalkKind kind);

struct ChainStructure {
  bool irreducible = false;
  std::size_t components = 0;
  // gcd of cycle lengths; 0 when the chain is reducible.
  std::size_t period = 0;
};

/// Strongly connected components and period of the support graph.
ChainStructure analyze_structure(const SparseMatrix& m);

struct StationaryOptions {
  double tol = 1e-12;
  std::size_t max_iters = 200'000;
};

/// ||pi^T - pi^T M||_1.
double stationarity_residual(const SparseMatrix& m, const Eigen::VectorXd& pi);

/// Stationary law of an irreducible row-stochastic matrix by damped power
/// iteration, i.e. iterating the lazy chain (I + M) / 2 which shares M's
/// stationary law but is aperiodic. Starts from a point mass on state 0.
/// Falls back to a dense direct solve up to kDenseSolveLimit states.
/// Throws NoConvergence for reducible chains or when neither route reaches
/// `tol`.
Eigen::VectorXd stationary_distribution(const SparseMatrix& m,
                                         const StationaryOptions& options = {});

struct NbChainReport {
  bool connected = false;
  // False when the input was rejected before building the chain.
  bool evaluated = false;
  std::size_t states = 0;
  double column_sum_max_dev = 0.0;
  double row_sum_max_dev = 0.0;
  // For the uniform vector 1/D.
  double stationarity_residual = 0.0;
  bool irreducible = false;
  std::size_t period = 0;
  bool passed = false;
};

/// Checks that the NB-HO-RW matrix is doubly stochastic and that the uniform
/// law over incidence pairs is stationary. Disconnected input is flagged and
/// not evaluated. Throws TooLarge.
NbChainReport verify_nb_stationarity(const Hypergraph& h, double tol = 1e-12);

struct TransitionTally {
  std::size_t from = 0;
  std::size_t to = 0;
  std::uint64_t count = 0;
  double empirical = 0.0;
  double exact = 0.0;
};

struct EmpiricalComparison {
  double max_abs_deviation = 0.0;
  std::uint64_t transitions = 0;
  // Rows and columns are states for NB-HO-RW and nodes otherwise.
  std::vector<TransitionTally> entries;
};

/// Runs `runs` walks of `length` steps through an in-memory oracle and
/// compares per-row empirical transition frequencies with the analytic
/// matrix. Throws InsufficientVisits if a row is never left.
EmpiricalComparison compare_empirical_transitions(const Hypergraph& h, WalkKind kind,
                                                  std::size_t length, std::size_t runs,
                                                  std::uint64_t seed);

/// "row col value" per stored entry, full precision.
void write_coordinate_list(std::ostream& out, const SparseMatrix& m);

}  // namespace hyperwalk
