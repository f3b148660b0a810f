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

#include "hyperwalk/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "hyperwalk/error.hpp"
#include "hyperwalk/oracle.hpp"
#include "hyperwalk/rng.hpp"

namespace hyperwalk {

GroundTruth ground_truth(const Hypergraph& h) {
  GroundTruth t;
  t.nodes = h.node_count();
  t.hyperedges = h.hyperedge_count();
  const auto d_total = static_cast<double>(h.incidence_count());
  t.mean_degree = d_total / static_cast<double>(t.nodes);
  t.mean_size = d_total / static_cast<double>(t.hyperedges);

  std::size_t degree_one = 0;
  for (NodeId i = 0; i < t.nodes; ++i) {
    const auto d = h.degree(i);
    t.max_degree = std::max(t.max_degree, d);
    if (d == 1) ++degree_one;
    t.degree_pmf[d] += 1.0;
  }
  for (EdgeId a = 0; a < t.hyperedges; ++a) {
    const auto s = h.size(a);
    t.max_size = std::max(t.max_size, s);
    t.size_pmf[s] += 1.0;
  }
  t.degree_one_fraction = static_cast<double>(degree_one) / static_cast<double>(t.nodes);

  auto finish = [](Distribution& pmf, Distribution& ccdf, double count) {
    double tail = 0.0;
    for (auto it = pmf.rbegin(); it != pmf.rend(); ++it) {
      tail += it->second;
      ccdf[it->first] = tail / count;
    }
    for (auto& [value, p] : pmf) p /= count;
  };
  finish(t.degree_pmf, t.degree_ccdf, static_cast<double>(t.nodes));
  finish(t.size_pmf, t.size_ccdf, static_cast<double>(t.hyperedges));
  return t;
}

double relative_error(double estimate, double truth) {
  if (truth == 0.0) throw Error(Errc::zero_truth, "relative error against a zero truth");
  return std::abs(estimate - truth) / std::abs(truth);
}

double l1_distance(const Distribution& p, const Distribution& q) {
  double total = 0.0;
  auto a = p.begin();
  auto b = q.begin();
  while (a != p.end() || b != q.end()) {
    if (b == q.end() || (a != p.end() && a->first < b->first)) {
      total += std::abs(a->second);
      ++a;
    } else if (a == p.end() || b->first < a->first) {
      total += std::abs(b->second);
      ++b;
    } else {
      total += std::abs(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return total;
}

std::string_view to_string(Metric metric) noexcept {
  switch (metric) {
    case Metric::mean_degree: return "mean-degree";
    case Metric::mean_size: return "mean-size";
    case Metric::degree_pmf: return "degree-pmf";
    case Metric::size_pmf: return "size-pmf";
  }
  return "unknown";
}

Metric parse_metric(std::string_view name) {
  for (auto m : {Metric::mean_degree, Metric::mean_size, Metric::degree_pmf, Metric::size_pmf}) {
    if (to_string(m) == name) return m;
  }
  throw Error(Errc::invalid_argument, "unknown metric '" + std::string(name) + "'");
}

void ExperimentSpec::validate() const {
  if (runs < 1) throw Error(Errc::invalid_argument, "runs must be >= 1");
  if (walks.empty()) throw Error(Errc::invalid_argument, "no walk kinds given");
  if (metrics.empty()) throw Error(Errc::invalid_argument, "no metrics given");
  if (lengths.empty() || lengths.front() < 1 ||
      std::adjacent_find(lengths.begin(), lengths.end(), std::greater_equal<>()) !=
          lengths.end()) {
    throw Error(Errc::invalid_argument, "lengths must be positive and strictly ascending");
  }
  if (burn_in >= lengths.front()) {
    throw Error(Errc::invalid_argument, "burn-in must be below the shortest length");
  }
}

namespace {

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    auto item = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::parse_error,
                std::string(key) + ": '" + std::string(text) + "' is not a valid number");
  }
  return value;
}

template <typename Fn>
void for_each_run(std::size_t runs, unsigned threads, Fn&& fn) {
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, runs));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const auto k = next.fetch_add(1);
      if (k >= runs) return;
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(runs);
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

// Walks every (walk, length) pair for run k and hands each sequence to
// `visit(walk_index, length_index, seq)`.
template <typename Visit>
void walk_run(InMemoryOracle& oracle, const ExperimentSpec& spec, std::size_t k, NodeId& seed,
              Visit&& visit) {
  Rng base = Rng::substream(spec.master_seed, k);
  seed = static_cast<NodeId>(base.uniform_index(oracle.hypergraph().node_count()));
  for (std::size_t w = 0; w < spec.walks.size(); ++w) {
    for (std::size_t l = 0; l < spec.lengths.size(); ++l) {
      Rng rng = base;
      auto seq = walk_from(oracle, spec.walks[w], seed, spec.lengths[l], rng);
      visit(w, l, seq);
    }
  }
}

bool wants(const ExperimentSpec& spec, Metric m) {
  return std::find(spec.metrics.begin(), spec.metrics.end(), m) != spec.metrics.end();
}

struct CellOutcome {
  std::vector<double> errors;  // aligned with spec.metrics
  Distribution degree_pmf;
  Distribution size_pmf;
};

}  // namespace

ExperimentSpec parse_experiment_spec(std::istream& in) {
  ExperimentSpec spec;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto text = trim(line);
    if (text.empty()) continue;
    auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = trim(std::string_view(text).substr(0, eq));
    const auto value = trim(std::string_view(text).substr(eq + 1));
    if (key == "dataset") {
      spec.dataset = value;
    } else if (key == "walks") {
      spec.walks.clear();
      for (const auto& w : split_list(value)) spec.walks.push_back(parse_walk_kind(w));
    } else if (key == "lengths") {
      spec.lengths.clear();
      for (const auto& r : split_list(value)) spec.lengths.push_back(parse_number<std::size_t>(r, key));
    } else if (key == "runs") {
      spec.runs = parse_number<std::size_t>(value, key);
    } else if (key == "metrics") {
      spec.metrics.clear();
      for (const auto& m : split_list(value)) spec.metrics.push_back(parse_metric(m));
    } else if (key == "seed") {
      spec.master_seed = parse_number<std::uint64_t>(value, key);
    } else if (key == "burn_in") {
      spec.burn_in = parse_number<std::size_t>(value, key);
    } else if (key == "threads") {
      spec.threads = parse_number<unsigned>(value, key);
    } else if (key == "keep_errors") {
      if (value != "true" && value != "false") {
        throw Error(Errc::parse_error, "keep_errors must be true or false");
      }
      spec.keep_errors = value == "true";
    } else {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return spec;
}

std::string format_experiment_spec(const ExperimentSpec& spec) {
  std::ostringstream out;
  auto join = [&out](const auto& items, auto&& show) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out << ',';
      out << show(items[i]);
    }
    out << '\n';
  };
  out << "dataset=" << spec.dataset << '\n';
  out << "walks=";
  join(spec.walks, [](WalkKind w) { return to_string(w); });
  out << "lengths=";
  join(spec.lengths, [](std::size_t r) { return r; });
  out << "runs=" << spec.runs << '\n';
  out << "metrics=";
  join(spec.metrics, [](Metric m) { return to_string(m); });
  out << "seed=" << spec.master_seed << '\n';
  out << "burn_in=" << spec.burn_in << '\n';
  out << "threads=" << spec.threads << '\n';
  out << "keep_errors=" << (spec.keep_errors ? "true" : "false") << '\n';
  return out.str();
}

double nrmse(std::span<const double> errors) {
  if (errors.empty()) throw Error(Errc::empty_sample, "NRMSE over zero runs");
  double sum = 0.0;
  for (double e : errors) sum += e * e;
  return std::sqrt(sum / static_cast<double>(errors.size()));
}

ExperimentResult run_nrmse_experiment(const Hypergraph& h, const ExperimentSpec& spec) {
  spec.validate();
  const auto truth = ground_truth(h);
  const auto walks = spec.walks.size();
  const auto lengths = spec.lengths.size();
  const bool per_degree = wants(spec, Metric::degree_pmf);
  const bool per_size = wants(spec, Metric::size_pmf);

  InMemoryOracle oracle(h);
  std::vector<CellOutcome> cells(spec.runs * walks * lengths);
  ExperimentResult result;
  result.seed_nodes.resize(spec.runs);

  for_each_run(spec.runs, spec.threads, [&](std::size_t k) {
    walk_run(oracle, spec, k, result.seed_nodes[k],
             [&](std::size_t w, std::size_t l, const SampleSequence& seq) {
               auto& cell = cells[(k * walks + w) * lengths + l];
               const auto steps = std::span<const Step>(seq.steps);
               if (per_degree) {
                 cell.degree_pmf = estimate_distribution(steps, DistributionKind::degree,
                                                         DistributionMode::pmf, spec.burn_in);
               }
               if (per_size) {
                 cell.size_pmf = estimate_distribution(steps, DistributionKind::size,
                                                       DistributionMode::pmf, spec.burn_in);
               }
               for (auto metric : spec.metrics) {
                 switch (metric) {
                   case Metric::mean_degree:
                     cell.errors.push_back(relative_error(
                         estimate_node(steps, features::degree(), spec.burn_in).estimate,
                         truth.mean_degree));
                     break;
                   case Metric::mean_size:
                     cell.errors.push_back(relative_error(
                         estimate_hyperedge(steps, features::size(), spec.burn_in).estimate,
                         truth.mean_size));
                     break;
                   case Metric::degree_pmf:
                     cell.errors.push_back(l1_distance(cell.degree_pmf, truth.degree_pmf));
                     break;
                   case Metric::size_pmf:
                     cell.errors.push_back(l1_distance(cell.size_pmf, truth.size_pmf));
                     break;
                 }
               }
             });
  });

  auto cell_at = [&](std::size_t k, std::size_t w, std::size_t l) -> const CellOutcome& {
    return cells[(k * walks + w) * lengths + l];
  };
  for (std::size_t w = 0; w < walks; ++w) {
    for (std::size_t l = 0; l < lengths; ++l) {
      for (std::size_t mi = 0; mi < spec.metrics.size(); ++mi) {
        std::vector<double> errors(spec.runs);
        for (std::size_t k = 0; k < spec.runs; ++k) errors[k] = cell_at(k, w, l).errors[mi];
        NrmseResult r{spec.walks[w], spec.lengths[l], spec.metrics[mi], nrmse(errors), spec.runs, {}};
        if (spec.keep_errors) r.errors = std::move(errors);
        result.summary.push_back(std::move(r));
      }

      auto per_value = [&](DistributionKind kind, const Distribution& true_pmf,
                           Distribution CellOutcome::*estimated) {
        for (const auto& [value, p] : true_pmf) {
          double squares = 0.0;
          for (std::size_t k = 0; k < spec.runs; ++k) {
            const auto& est = cell_at(k, w, l).*estimated;
            auto it = est.find(value);
            const double e = ((it == est.end() ? 0.0 : it->second) - p) / p;
            squares += e * e;
          }
          result.per_value.push_back({spec.walks[w], spec.lengths[l], kind, value, p,
                                      std::sqrt(squares / static_cast<double>(spec.runs))});
        }
      };
      if (per_degree) per_value(DistributionKind::degree, truth.degree_pmf, &CellOutcome::degree_pmf);
      if (per_size) per_value(DistributionKind::size, truth.size_pmf, &CellOutcome::size_pmf);
    }
  }
  return result;
}

std::vector<QueryRepetitionRow> compare_queries_and_repetition(const Hypergraph& h,
                                                               const ExperimentSpec& spec) {
  spec.validate();
  const auto walks = spec.walks.size();
  const auto lengths = spec.lengths.size();

  struct Cell {
    QueryStats stats;
    double degree_sum = 0.0;
    double edge_rep = 0.0;
    double node_rep = 0.0;
  };
  InMemoryOracle oracle(h);
  std::vector<Cell> cells(spec.runs * walks * lengths);
  std::vector<NodeId> seeds(spec.runs);

  for_each_run(spec.runs, spec.threads, [&](std::size_t k) {
    walk_run(oracle, spec, k, seeds[k], [&](std::size_t w, std::size_t l, const SampleSequence& seq) {
      auto& cell = cells[(k * walks + w) * lengths + l];
      cell.stats = seq.stats;
      for (const auto& step : seq.steps) cell.degree_sum += step.degree;
      if (seq.steps.size() >= 2) {
        cell.edge_rep = hyperedge_repetition_rate(seq.steps);
        cell.node_rep = node_repetition_rate(seq.steps);
      }
    });
  });

  std::vector<QueryRepetitionRow> rows;
  const auto runs = static_cast<double>(spec.runs);
  for (std::size_t w = 0; w < walks; ++w) {
    for (std::size_t l = 0; l < lengths; ++l) {
      QueryRepetitionRow row{spec.walks[w], spec.lengths[l], spec.runs, 0, 0, 0, 0, 0};
      for (std::size_t k = 0; k < spec.runs; ++k) {
        const auto& c = cells[(k * walks + w) * lengths + l];
        row.mean_node_queries += static_cast<double>(c.stats.node_queries);
        row.mean_hyperedge_queries += static_cast<double>(c.stats.hyperedge_queries);
        row.mean_degree_sum += c.degree_sum;
        row.mean_hyperedge_repetition += c.edge_rep;
        row.mean_node_repetition += c.node_rep;
      }
      row.mean_node_queries /= runs;
      row.mean_hyperedge_queries /= runs;
      row.mean_degree_sum /= runs;
      row.mean_hyperedge_repetition /= runs;
      row.mean_node_repetition /= runs;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_nrmse_csv(std::ostream& out, const ExperimentSpec& spec,
                     std::span<const NrmseResult> results) {
  const auto precision = out.precision(10);
  out << "dataset,walk,r,metric,nrmse,runs\n";
  for (const auto& r : results) {
    out << spec.dataset << ',' << to_string(r.walk) << ',' << r.length << ','
        << to_string(r.metric) << ',' << r.nrmse << ',' << r.runs << '\n';
  }
  out.precision(precision);
}

void write_value_nrmse_csv(std::ostream& out, const ExperimentSpec& spec,
                           std::span<const ValueNrmse> results) {
  const auto precision = out.precision(10);
  out << "dataset,walk,r,kind,value,truth,nrmse\n";
  for (const auto& r : results) {
    out << spec.dataset << ',' << to_string(r.walk) << ',' << r.length << ','
        << (r.kind == DistributionKind::degree ? "degree" : "size") << ',' << r.value << ','
        << r.truth << ',' << r.nrmse << '\n';
  }
  out.precision(precision);
}

void write_query_csv(std::ostream& out, const ExperimentSpec& spec,
                     std::span<const QueryRepetitionRow> rows) {
  const auto precision = out.precision(10);
  out << "dataset,walk,r,runs,node_queries,hyperedge_queries,degree_sum,hyperedge_repetition,"
         "node_repetition\n";
  for (const auto& r : rows) {
    out << spec.dataset << ',' << to_string(r.walk) << ',' << r.length << ',' << r.runs << ','
        << r.mean_node_queries << ',' << r.mean_hyperedge_queries << ',' << r.mean_degree_sum
        << ',' << r.mean_hyperedge_repetition << ',' << r.mean_node_repetition << '\n';
  }
  out.precision(precision);
}

}  // namespace hyperwalk
