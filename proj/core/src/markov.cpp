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

#include "hyperwalk/markov.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <unordered_map>

#include "hyperwalk/error.hpp"
#include "hyperwalk/oracle.hpp"

namespace hyperwalk {

StateSpace::StateSpace(const Hypergraph& h) {
  if (h.incidence_count() > kMaxAnalysisStates) {
    throw Error(Errc::too_large, std::to_string(h.incidence_count()) +
                                     " incidence pairs exceed the analysis limit of " +
                                     std::to_string(kMaxAnalysisStates));
  }
  pairs_.reserve(h.incidence_count());
  node_offsets_.reserve(h.node_count() + 1);
  for (NodeId i = 0; i < h.node_count(); ++i) {
    node_offsets_.push_back(pairs_.size());
    for (EdgeId a : h.hyperedges_of(i)) pairs_.push_back({i, a});
  }
  node_offsets_.push_back(pairs_.size());
}

std::size_t StateSpace::index_of(NodeId node, EdgeId hyperedge) const {
  if (node + 1 < node_offsets_.size()) {
    auto first = pairs_.begin() + static_cast<std::ptrdiff_t>(node_offsets_[node]);
    auto last = pairs_.begin() + static_cast<std::ptrdiff_t>(node_offsets_[node + 1]);
    auto it = std::lower_bound(first, last, hyperedge,
                               [](const IncidencePair& p, EdgeId a) { return p.hyperedge < a; });
    if (it != last && it->hyperedge == hyperedge) {
      return static_cast<std::size_t>(it - pairs_.begin());
    }
  }
  throw Error(Errc::not_incident, "(" + std::to_string(node) + ", " + std::to_string(hyperedge) +
                                      ") is not an incidence pair");
}

ChainMatrix build_nb_ho_matrix(const Hypergraph& h) {
  StateSpace states(h);
  const auto count = static_cast<Eigen::Index>(states.size());
  std::vector<Eigen::Triplet<double>> entries;

  for (std::size_t row = 0; row < states.size(); ++row) {
    const auto [i, a] = states[row];
    const double node_step = 1.0 / static_cast<double>(h.size(a) - 1);
    for (NodeId j : h.members(a)) {
      if (j == i) continue;
      const auto d = h.degree(j);
      if (d == 1) {
        entries.emplace_back(static_cast<Eigen::Index>(row),
                             static_cast<Eigen::Index>(states.index_of(j, a)), node_step);
        continue;
      }
      const double p = node_step / static_cast<double>(d - 1);
      for (EdgeId b : h.hyperedges_of(j)) {
        if (b == a) continue;
        entries.emplace_back(static_cast<Eigen::Index>(row),
                             static_cast<Eigen::Index>(states.index_of(j, b)), p);
      }
    }
  }
  SparseMatrix u(count, count);
  u.setFromTriplets(entries.begin(), entries.end());
  return {std::move(states), std::move(u)};
}

SparseMatrix build_node_matrix(const Hypergraph& h, WalkKind kind) {
  if (kind == WalkKind::non_backtracking) {
    throw Error(Errc::invalid_argument, "NB-HO-RW is not Markov on nodes; use build_nb_ho_matrix");
  }
  if (h.incidence_count() > kMaxAnalysisStates) {
    throw Error(Errc::too_large, "hypergraph exceeds the analysis limit");
  }
  const auto n = static_cast<Eigen::Index>(h.node_count());
  std::vector<Eigen::Triplet<double>> entries;
  std::unordered_map<NodeId, double> row;

  for (NodeId i = 0; i < h.node_count(); ++i) {
    row.clear();
    double denominator = 0.0;
    for (EdgeId a : h.hyperedges_of(i)) {
      const double excess = static_cast<double>(h.size(a)) - 1.0;
      double numerator = 0.0;
      switch (kind) {
        case WalkKind::projected:  // sum_a b_ia b_ja / sum_b (s_b - 1) b_ib
          numerator = 1.0;
          denominator += excess;
          break;
        case WalkKind::carletti:  // sum_a (s_a - 1) b_ia b_ja / sum_b (s_b - 1)^2 b_ib
          numerator = excess;
          denominator += excess * excess;
          break;
        case WalkKind::higher_order:  // (1 / d_i) sum_a b_ia b_ja / (s_a - 1)
          numerator = 1.0 / excess;
          denominator = static_cast<double>(h.degree(i));
          break;
        case WalkKind::non_backtracking:
          break;
      }
      for (NodeId j : h.members(a)) {
        if (j != i) row[j] += numerator;
      }
    }
    for (const auto& [j, value] : row) {
      entries.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j),
                           value / denominator);
    }
  }
  SparseMatrix t(n, n);
  t.setFromTriplets(entries.begin(), entries.end());
  return t;
}

namespace {

// Iterative Tarjan over the support of m (entries > 0).
std::size_t count_strong_components(const SparseMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0;
  std::size_t components = 0;

  struct Frame {
    std::size_t node;
    SparseMatrix::InnerIterator it;
  };
  std::vector<Frame> frames;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    frames.push_back({root, SparseMatrix::InnerIterator(m, static_cast<Eigen::Index>(root))});
    while (!frames.empty()) {
      auto& frame = frames.back();
      if (frame.it) {
        const auto next = static_cast<std::size_t>(frame.it.col());
        const bool live = frame.it.value() > 0.0;
        ++frame.it;
        if (!live) continue;
        if (index[next] == kUnvisited) {
          index[next] = low[next] = next_index++;
          stack.push_back(next);
          on_stack[next] = true;
          frames.push_back({next, SparseMatrix::InnerIterator(m, static_cast<Eigen::Index>(next))});
        } else if (on_stack[next]) {
          low[frame.node] = std::min(low[frame.node], index[next]);
        }
        continue;
      }
      const auto v = frame.node;
      frames.pop_back();
      if (!frames.empty()) {
        auto parent = frames.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] == index[v]) {
        ++components;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
        } while (w != v);
      }
    }
  }
  return components;
}

// For an irreducible chain: gcd over support edges (u, v) of
// level(u) + 1 - level(v), with BFS levels from state 0.
std::size_t chain_period(const SparseMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(n, kUnset);
  std::vector<std::size_t> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto u = queue[head];
    for (SparseMatrix::InnerIterator it(m, static_cast<Eigen::Index>(u)); it; ++it) {
      auto v = static_cast<std::size_t>(it.col());
      if (it.value() > 0.0 && level[v] == kUnset) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::size_t g = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (SparseMatrix::InnerIterator it(m, static_cast<Eigen::Index>(u)); it; ++it) {
      if (!(it.value() > 0.0)) continue;
      auto v = static_cast<std::size_t>(it.col());
      auto diff = static_cast<std::int64_t>(level[u]) + 1 - static_cast<std::int64_t>(level[v]);
      g = std::gcd(g, static_cast<std::size_t>(std::llabs(diff)));
    }
  }
  return g;
}

}  // namespace

ChainStructure analyze_structure(const SparseMatrix& m) {
  ChainStructure s;
  if (m.rows() == 0) return s;
  s.components = count_strong_components(m);
  s.irreducible = s.components == 1;
  if (s.irreducible) s.period = chain_period(m);
  return s;
}

double stationarity_residual(const SparseMatrix& m, const Eigen::VectorXd& pi) {
  Eigen::RowVectorXd next = pi.transpose() * m;
  return (next - pi.transpose()).lpNorm<1>();
}

Eigen::VectorXd stationary_distribution(const SparseMatrix& m, const StationaryOptions& options) {
  const auto n = m.rows();
  if (n == 0 || m.cols() != n) throw Error(Errc::invalid_argument, "matrix must be square");
  auto structure = analyze_structure(m);
  if (!structure.irreducible) {
    throw Error(Errc::no_convergence, "chain is reducible (" +
                                          std::to_string(structure.components) +
                                          " strongly connected components)");
  }

  Eigen::RowVectorXd x = Eigen::RowVectorXd::Zero(n);
  x(0) = 1.0;
  for (std::size_t iter = 0; iter < options.max_iters; ++iter) {
    Eigen::RowVectorXd y = x * m;
    if ((y - x).lpNorm<1>() <= options.tol) return x.transpose();
    x = 0.5 * (x + y);
    x /= x.sum();
  }

  if (static_cast<std::size_t>(n) <= kDenseSolveLimit) {
    Eigen::MatrixXd a = Eigen::MatrixXd(m).transpose() - Eigen::MatrixXd::Identity(n, n);
    a.row(n - 1).setOnes();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    b(n - 1) = 1.0;
    Eigen::VectorXd pi = a.fullPivLu().solve(b);
    pi = pi.cwiseMax(0.0);
    pi /= pi.sum();
    if (stationarity_residual(m, pi) <= options.tol) return pi;
  }
  throw Error(Errc::no_convergence,
              "no stationary vector within " + std::to_string(options.max_iters) + " iterations");
}

NbChainReport verify_nb_stationarity(const Hypergraph& h, double tol) {
  NbChainReport report;
  report.states = h.incidence_count();
  report.connected = is_connected(h);
  if (!report.connected) return report;

  auto chain = build_nb_ho_matrix(h);
  const auto& u = chain.transitions;
  const auto d = static_cast<Eigen::Index>(chain.states.size());
  report.evaluated = true;

  Eigen::VectorXd ones = Eigen::VectorXd::Ones(d);
  Eigen::VectorXd row_sums = u * ones;
  Eigen::RowVectorXd column_sums = ones.transpose() * u;
  report.row_sum_max_dev = (row_sums.array() - 1.0).abs().maxCoeff();
  report.column_sum_max_dev = (column_sums.array() - 1.0).abs().maxCoeff();
  report.stationarity_residual =
      stationarity_residual(u, Eigen::VectorXd::Constant(d, 1.0 / static_cast<double>(d)));

  auto structure = analyze_structure(u);
  report.irreducible = structure.irreducible;
  report.period = structure.period;
  report.passed = report.irreducible && report.row_sum_max_dev <= tol &&
                  report.column_sum_max_dev <= tol && report.stationarity_residual <= tol;
  return report;
}

EmpiricalComparison compare_empirical_transitions(const Hypergraph& h, WalkKind kind,
                                                  std::size_t length, std::size_t runs,
                                                  std::uint64_t seed) {
  const bool on_states = kind == WalkKind::non_backtracking;
  std::optional<StateSpace> states;
  SparseMatrix exact;
  if (on_states) {
    auto chain = build_nb_ho_matrix(h);
    states.emplace(std::move(chain.states));
    exact = std::move(chain.transitions);
  } else {
    exact = build_node_matrix(h, kind);
  }
  const auto rows = static_cast<std::size_t>(exact.rows());

  std::vector<std::unordered_map<std::size_t, std::uint64_t>> counts(rows);
  std::vector<std::uint64_t> row_totals(rows, 0);
  InMemoryOracle oracle(h);
  EmpiricalComparison result;

  for (std::size_t run = 0; run < runs; ++run) {
    Rng rng = Rng::substream(seed, run);
    const auto start = static_cast<NodeId>(rng.uniform_index(h.node_count()));
    auto seq = walk_from(oracle, kind, start, length, rng);
    auto state_of = [&](const Step& s) {
      return on_states ? states->index_of(s.node, s.hyperedge) : static_cast<std::size_t>(s.node);
    };
    for (std::size_t k = 0; k + 1 < seq.steps.size(); ++k) {
      auto from = state_of(seq.steps[k]);
      ++counts[from][state_of(seq.steps[k + 1])];
      ++row_totals[from];
      ++result.transitions;
    }
  }

  for (std::size_t row = 0; row < rows; ++row) {
    if (row_totals[row] == 0) {
      throw Error(Errc::insufficient_visits, "row " + std::to_string(row) + " was never left");
    }
    const auto total = static_cast<double>(row_totals[row]);
    std::unordered_map<std::size_t, double> expected;
    for (SparseMatrix::InnerIterator it(exact, static_cast<Eigen::Index>(row)); it; ++it) {
      expected[static_cast<std::size_t>(it.col())] = it.value();
    }
    std::vector<std::size_t> columns;
    for (const auto& [col, p] : expected) columns.push_back(col);
    for (const auto& [col, c] : counts[row]) {
      if (!expected.contains(col)) columns.push_back(col);
    }
    std::sort(columns.begin(), columns.end());
    for (auto col : columns) {
      TransitionTally tally;
      tally.from = row;
      tally.to = col;
      auto found = counts[row].find(col);
      tally.count = found == counts[row].end() ? 0 : found->second;
      tally.empirical = static_cast<double>(tally.count) / total;
      auto e = expected.find(col);
      tally.exact = e == expected.end() ? 0.0 : e->second;
      result.max_abs_deviation =
          std::max(result.max_abs_deviation, std::abs(tally.empirical - tally.exact));
      result.entries.push_back(tally);
    }
  }
  return result;
}

void write_coordinate_list(std::ostream& out, const SparseMatrix& m) {
  const auto precision = out.precision(17);
  for (Eigen::Index row = 0; row < m.outerSize(); ++row) {
    for (SparseMatrix::InnerIterator it(m, row); it; ++it) {
      out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
    }
  }
  out.precision(precision);
}

}  // namespace hyperwalk
