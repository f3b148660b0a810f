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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "CLI11.hpp"
#include "hyperwalk/error.hpp"
#include "hyperwalk/estimators.hpp"
#include "hyperwalk/harness.hpp"
#include "hyperwalk/hypergraph_io.hpp"
#include "hyperwalk/markov.hpp"
#include "hyperwalk/oracle.hpp"
#include "hyperwalk/remote_oracle.hpp"
#include "hyperwalk/report.hpp"
#include "hyperwalk/sample_io.hpp"
#include "hyperwalk/walk.hpp"
#include "json.hpp"

namespace hyperwalk::cli {
namespace {

// Burn-in used for restricted-access crawls with a fixed seed author.
constexpr std::size_t kOpenAlexBurnIn = 5000;

struct UsageError {
  std::string message;
};

struct InputOptions {
  std::string input;
  std::string sizes;
  std::string members;
  bool sanitize = false;
  bool no_lcc = false;

  bool has_file() const { return !input.empty() || !sizes.empty() || !members.empty(); }

  void validate() const {
    const bool list = !input.empty();
    const bool pair = !sizes.empty() || !members.empty();
    if (list && pair) throw UsageError{"use either --input or --sizes/--members, not both"};
    if (pair && (sizes.empty() || members.empty())) {
      throw UsageError{"--sizes and --members must be given together"};
    }
    if (!list && !pair) throw UsageError{"no input: give --input or --sizes/--members"};
  }
};

void add_input_options(CLI::App* app, InputOptions& in, bool lcc_flag) {
  app->add_option("--input", in.input, "Hyperedge list (one hyperedge per line)");
  app->add_option("--sizes", in.sizes, "Sizes file of the two-file layout");
  app->add_option("--members", in.members, "Members file of the two-file layout");
  app->add_flag("--sanitize", in.sanitize,
                "Drop repeated members and hyperedges with fewer than two nodes");
  if (lcc_flag) {
    app->add_flag("--no-lcc", in.no_lcc, "Keep the hypergraph as loaded instead of its LCC");
  }
}

Hypergraph load(const InputOptions& in, bool extract_lcc, std::ostream& err) {
  ReadOptions options{in.sanitize};
  auto h = in.input.empty() ? read_sizes_members(in.sizes, in.members, options)
                            : read_hyperedge_list(in.input, options);
  if (!extract_lcc || is_connected(h)) return h;
  auto lcc = largest_connected_component(h);
  err << "note: using the largest connected component (" << lcc.node_count() << " of "
      << h.node_count() << " nodes, " << lcc.hyperedge_count() << " of " << h.hyperedge_count()
      << " hyperedges)\n";
  return lcc;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot write '" + path + "'");
  return out;
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  auto file = open_output(path);
  write(file);
}

std::unordered_set<std::string> read_label_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
  std::unordered_set<std::string> labels;
  std::string label;
  while (in >> label) labels.insert(label);
  return labels;
}

std::unordered_map<std::string, std::string> read_attributes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
  std::unordered_map<std::string, std::string> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string label, value;
    if (!(fields >> label)) continue;
    if (label.front() == '#') continue;
    if (!(fields >> value)) {
      throw Error(Errc::parse_error,
                  path + ":" + std::to_string(line_no) + ": expected '<label> <category>'");
    }
    table[label] = value;
  }
  return table;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  InputOptions input;
  std::string endpoint;
  std::optional<std::int64_t> timeout_ms;
  std::optional<int> retries;
  std::string rate_limit;
  std::string walk = "nb-ho-rw";
  std::size_t length = 0;
  std::string seed_node;
  std::optional<std::uint64_t> rng_seed;
  std::size_t burn_in = 0;
  std::optional<std::uint64_t> max_node_queries;
  std::optional<std::uint64_t> max_hyperedge_queries;
  std::string output;
  std::string stats_output;
};

int cmd_sample(const SampleArgs& a, std::ostream& out, std::ostream& err) {
  WalkConfig config;
  try {
    config.kind = parse_walk_kind(a.walk);
    config.length = a.length;
    config.burn_in = a.burn_in;
    config.validate();
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
  std::string endpoint = a.endpoint;
  if (endpoint.empty() && !a.input.has_file()) {
    if (const char* env = std::getenv("HYPERWALK_ENDPOINT")) endpoint = env;
  }
  const bool remote = !endpoint.empty();
  if (remote && a.input.has_file()) throw UsageError{"use either a dataset file or --endpoint"};
  if (!remote) a.input.validate();
  if (remote && a.seed_node.empty()) throw UsageError{"--seed-node is required with --endpoint"};
  if (a.output.empty()) throw UsageError{"--output is required"};

  if (a.rng_seed) {
    config.rng_seed = *a.rng_seed;
  } else {
    std::random_device entropy;
    config.rng_seed = (static_cast<std::uint64_t>(entropy()) << 32) | entropy();
    err << "rng_seed=" << config.rng_seed << '\n';
  }
  QueryBudget budget{a.max_node_queries, a.max_hyperedge_queries};

  std::optional<Hypergraph> h;
  std::unique_ptr<QueryOracle> oracle;
  if (remote) {
    auto remote_config = RemoteConfig::from_endpoint(endpoint);
    remote_config.apply_environment();
    auto parsed = RemoteConfig::from_endpoint(endpoint);
    remote_config.host = parsed.host;
    remote_config.port = parsed.port;
    if (a.timeout_ms) remote_config.timeout = std::chrono::milliseconds(*a.timeout_ms);
    if (a.retries) remote_config.retries = *a.retries;
    if (!a.rate_limit.empty()) remote_config.rate_limit = parse_rate_limit(a.rate_limit);
    oracle = std::make_unique<RemoteOracle>(remote_config);
  } else {
    h.emplace(load(a.input, !a.input.no_lcc, err));
    oracle = std::make_unique<InMemoryOracle>(*h);
  }

  config.seed_node = a.seed_node;
  if (config.seed_node.empty()) {
    // Uniform seed from a stream separate from the walk's own.
    Rng pick = Rng::substream(config.rng_seed, 0);
    config.seed_node = h->node_label(static_cast<NodeId>(pick.uniform_index(h->node_count())));
    err << "seed_node=" << config.seed_node << '\n';
  }

  auto seq = run_walk(*oracle, config, budget);
  {
    auto file = open_output(a.output);
    write_sample(file, seq, config, *oracle);
  }

  nlohmann::ordered_json stats = {
      {"walk", to_string(config.kind)},
      {"length", config.length},
      {"steps", seq.steps.size()},
      {"seed_node", config.seed_node},
      {"rng_seed", config.rng_seed},
      {"truncated", seq.truncated},
      {"node_queries", seq.stats.node_queries},
      {"hyperedge_queries", seq.stats.hyperedge_queries},
  };
  emit(a.stats_output, out, [&](std::ostream& o) { o << stats.dump(2) << '\n'; });
  if (seq.truncated) {
    err << "warning: query budget exhausted after " << seq.steps.size() << " of " << config.length
        << " steps\n";
    return kTruncated;
  }
  return kOk;
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string sample;
  std::string property;
  std::string subset_file;
  std::string attributes_file;
  std::string kind = "hyperedge";
  std::optional<std::size_t> burn_in;
  std::string preset;
  std::string format = "json";
  std::string output;
};

int cmd_estimate(const EstimateArgs& a, std::ostream& out, std::ostream&) {
  static const std::unordered_set<std::string> properties = {
      "avg-degree", "avg-size", "degree-pmf", "size-pmf", "degree-ccdf", "size-ccdf",
      "composition"};
  if (!properties.contains(a.property)) throw UsageError{"unknown --property " + a.property};
  if (a.property == "composition" && a.attributes_file.empty()) {
    throw UsageError{"composition needs --attributes-file"};
  }
  if (a.kind != "node" && a.kind != "hyperedge") throw UsageError{"--kind must be node or hyperedge"};
  if (a.format != "json" && a.format != "csv") throw UsageError{"--format must be json or csv"};
  if (a.format == "csv" && a.property.find("-pmf") == std::string::npos &&
      a.property.find("-ccdf") == std::string::npos) {
    throw UsageError{"csv output is only available for distributions"};
  }
  if (!a.preset.empty() && a.preset != "openalex") throw UsageError{"unknown --preset " + a.preset};

  std::ifstream in(a.sample);
  if (!in) throw Error(Errc::io_error, "cannot open '" + a.sample + "'");
  auto file = read_sample(in);
  std::size_t burn_in = file.config.burn_in;
  if (a.preset == "openalex") burn_in = kOpenAlexBurnIn;
  if (a.burn_in) burn_in = *a.burn_in;
  const std::span<const Step> steps = file.sequence.steps;

  const bool node_side = a.property.starts_with("degree") || a.property == "avg-degree" ||
                         (a.property == "composition" && a.kind == "node");
  const auto& labels = node_side ? file.node_labels : file.hyperedge_labels;
  std::function<bool(std::uint32_t)> in_subset;
  if (!a.subset_file.empty()) {
    auto chosen = read_label_set(a.subset_file);
    std::vector<bool> member(labels.size());
    for (std::size_t id = 0; id < labels.size(); ++id) member[id] = chosen.contains(labels[id]);
    in_subset = [member = std::move(member)](std::uint32_t id) { return member[id]; };
  }
  auto node_pred = [&](NodeId v, std::size_t) { return !in_subset || in_subset(v); };
  auto edge_pred = [&](EdgeId e, std::size_t) { return !in_subset || in_subset(e); };

  auto write = [&](const std::string& text) {
    emit(a.output, out, [&](std::ostream& o) { o << text << '\n'; });
  };

  if (a.property == "avg-degree") {
    write(to_json(estimate_node_subset(steps, features::degree(), node_pred, burn_in), a.property,
                  file.config));
  } else if (a.property == "avg-size") {
    write(to_json(estimate_hyperedge_subset(steps, features::size(), edge_pred, burn_in),
                  a.property, file.config));
  } else if (a.property == "composition") {
    auto table = read_attributes(a.attributes_file);
    CategoryLookup category = [&](std::uint32_t id) -> std::optional<std::string> {
      auto it = table.find(labels[id]);
      if (it == table.end()) return std::nullopt;
      return it->second;
    };
    auto shares = estimate_composition(
        steps, node_side ? DistributionKind::degree : DistributionKind::size, category, in_subset,
        burn_in);
    write(to_json(shares, a.property, file.config, steps.size() - burn_in, burn_in));
  } else {
    const auto kind = node_side ? DistributionKind::degree : DistributionKind::size;
    const auto mode = a.property.ends_with("pmf") ? DistributionMode::pmf : DistributionMode::ccdf;
    Distribution d;
    if (in_subset) {
      // Subset distributions go through the indicator estimators so that the
      // subset restriction applies to both Phi and Psi.
      auto base = estimate_distribution(steps, kind, DistributionMode::pmf, burn_in);
      for (const auto& [value, unused] : base) {
        const auto v = value;
        EstimateReport r;
        if (kind == DistributionKind::degree) {
          auto f = mode == DistributionMode::pmf ? features::degree_equals(v)
                                                 : features::degree_at_least(v);
          r = estimate_node_subset(steps, f, node_pred, burn_in);
        } else {
          auto f = mode == DistributionMode::pmf ? features::size_equals(v)
                                                 : features::size_at_least(v);
          r = estimate_hyperedge_subset(steps, f, edge_pred, burn_in);
        }
        if (r.estimate > 0.0 || mode == DistributionMode::ccdf) d[v] = r.estimate;
      }
      // Trim ccdf points above the subset's own support.
      if (mode == DistributionMode::ccdf) std::erase_if(d, [](const auto& p) { return p.second == 0.0; });
    } else {
      d = estimate_distribution(steps, kind, mode, burn_in);
    }
    if (a.format == "csv") {
      emit(a.output, out, [&](std::ostream& o) { write_distribution_csv(o, d); });
    } else {
      write(to_json(d, a.property, file.config, steps.size() - burn_in, burn_in));
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  InputOptions input;
  bool lcc = false;
  double tol = 1e-12;
  std::string dump_matrix;
  std::string output;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  a.input.validate();
  if (!(a.tol > 0.0)) throw UsageError{"--tol must be positive"};
  auto h = load(a.input, a.lcc, err);
  auto report = verify_nb_stationarity(h, a.tol);

  auto json = nlohmann::ordered_json::parse(to_json(report));
  if (report.evaluated) {
    auto chain = build_nb_ho_matrix(h);
    if (!a.dump_matrix.empty()) {
      auto file = open_output(a.dump_matrix);
      write_coordinate_list(file, chain.transitions);
    }
    // Independent check: solve for the stationary law from a point mass and
    // compare with the uniform vector.
    try {
      auto pi = stationary_distribution(chain.transitions, {a.tol, 200'000});
      const double uniform = 1.0 / static_cast<double>(pi.size());
      json["solver_max_dev_from_uniform"] = (pi.array() - uniform).abs().maxCoeff();
    } catch (const Error& e) {
      json["solver_max_dev_from_uniform"] = nullptr;
      json["solver_error"] = e.what();
    }
    if (report.period > 1) {
      json["note"] = "chain is periodic (period " + std::to_string(report.period) +
                     "); the uniform law is stationary but the chain is not aperiodic";
    }
  } else {
    json["note"] = "hypergraph is not connected; the chain is reducible and was not evaluated";
  }
  emit(a.output, out, [&](std::ostream& o) { o << json.dump(2) << '\n'; });
  return report.passed ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- nrmse

struct NrmseArgs {
  InputOptions input;
  std::string config;
  std::string walks;
  std::string lengths;
  std::optional<std::size_t> runs;
  std::string metrics;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> burn_in;
  std::optional<unsigned> threads;
  std::string output;
  std::string per_value_output;
  std::string queries_output;
};

int cmd_nrmse(NrmseArgs a, std::ostream& out, std::ostream& err) {
  ExperimentSpec spec;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw Error(Errc::io_error, "cannot open '" + a.config + "'");
    spec = parse_experiment_spec(in);
  }
  if (!a.input.has_file()) a.input.input = spec.dataset;
  if (spec.dataset.empty()) spec.dataset = a.input.input.empty() ? a.input.members : a.input.input;
  try {
    std::istringstream overrides(
        (a.walks.empty() ? "" : "walks=" + a.walks + "\n") +
        (a.lengths.empty() ? "" : "lengths=" + a.lengths + "\n") +
        (a.metrics.empty() ? "" : "metrics=" + a.metrics + "\n"));
    auto patch = parse_experiment_spec(overrides);
    if (!a.walks.empty()) spec.walks = patch.walks;
    if (!a.lengths.empty()) spec.lengths = patch.lengths;
    if (!a.metrics.empty()) spec.metrics = patch.metrics;
    if (a.runs) spec.runs = *a.runs;
    if (a.seed) spec.master_seed = *a.seed;
    if (a.burn_in) spec.burn_in = *a.burn_in;
    if (a.threads) spec.threads = *a.threads;
    spec.validate();
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
  a.input.validate();

  auto h = load(a.input, !a.input.no_lcc, err);
  const auto echo = format_experiment_spec(spec);
  auto with_echo = [&](std::ostream& o) {
    std::istringstream lines(echo);
    std::string line;
    while (std::getline(lines, line)) o << "# " << line << '\n';
  };

  auto result = run_nrmse_experiment(h, spec);
  emit(a.output, out, [&](std::ostream& o) {
    with_echo(o);
    write_nrmse_csv(o, spec, result.summary);
  });
  if (!a.per_value_output.empty()) {
    auto file = open_output(a.per_value_output);
    with_echo(file);
    write_value_nrmse_csv(file, spec, result.per_value);
  }
  if (!a.queries_output.empty()) {
    auto rows = compare_queries_and_repetition(h, spec);
    auto file = open_output(a.queries_output);
    with_echo(file);
    write_query_csv(file, spec, rows);
  }
  return kOk;
}

// ---------------------------------------------------------------- stats / convert

struct StatsArgs {
  InputOptions input;
  bool json = false;
};

int cmd_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
  a.input.validate();
  auto h = load(a.input, !a.input.no_lcc, err);
  auto truth = ground_truth(h);
  if (a.json) {
    out << to_json(truth) << '\n';
    return kOk;
  }
  auto fixed = [](double v, int digits) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(digits);
    s << v;
    return s.str();
  };
  out << "n " << truth.nodes << '\n'
      << "m " << truth.hyperedges << '\n'
      << "mean_degree " << fixed(truth.mean_degree, 3) << '\n'
      << "max_degree " << truth.max_degree << '\n'
      << "p_degree_one " << fixed(truth.degree_one_fraction, 3) << '\n'
      << "mean_size " << fixed(truth.mean_size, 3) << '\n'
      << "max_size " << truth.max_size << '\n';
  return kOk;
}

struct ConvertArgs {
  InputOptions input;
  std::string output;
};

int cmd_convert(const ConvertArgs& a, std::ostream& out, std::ostream& err) {
  a.input.validate();
  auto h = load(a.input, false, err);
  emit(a.output, out, [&](std::ostream& o) { write_hyperedge_list(o, h); });
  return kOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::zero_denominator:
    case Errc::empty_sample:
      return kDegenerate;
    case Errc::invalid_argument:
      return kUsage;
    case Errc::remote_failure:
      return kUnavailable;
    default:
      return kData;
  }
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random-walk sampling and estimation on hypergraphs", "hyperwalk"};
  app.require_subcommand(1);

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "Run a walk and write its sample sequence");
  add_input_options(s, sample.input, true);
  s->add_option("--endpoint", sample.endpoint, "Remote oracle host:port");
  s->add_option("--timeout-ms", sample.timeout_ms, "Remote request timeout");
  s->add_option("--retries", sample.retries, "Remote retries per request");
  s->add_option("--rate-limit", sample.rate_limit, "Remote request rate, N or N/SECONDS[,BURST]");
  s->add_option("--walk", sample.walk, "p-rw, c-rw, ho-rw or nb-ho-rw")->capture_default_str();
  s->add_option("--length", sample.length, "Number of steps r")->required();
  s->add_option("--seed-node", sample.seed_node, "Label of the seed node (default: uniform)");
  s->add_option("--rng-seed", sample.rng_seed, "Generator seed (default: from entropy, printed)");
  s->add_option("--burn-in", sample.burn_in, "Burn-in recorded for later estimation");
  s->add_option("--max-node-queries", sample.max_node_queries, "Node query budget");
  s->add_option("--max-hyperedge-queries", sample.max_hyperedge_queries, "Hyperedge query budget");
  s->add_option("--output,-o", sample.output, "Sample sequence file")->required();
  s->add_option("--stats-output", sample.stats_output, "Write stats JSON here instead of stdout");

  EstimateArgs estimate;
  auto* e = app.add_subcommand("estimate", "Estimate a property from a sample sequence");
  e->add_option("--sample", estimate.sample, "Sample sequence file")->required();
  e->add_option("--property", estimate.property,
                "avg-degree|avg-size|degree-pmf|size-pmf|degree-ccdf|size-ccdf|composition")
      ->required();
  e->add_option("--subset-file", estimate.subset_file, "Labels of the subset, one per line");
  e->add_option("--attributes-file", estimate.attributes_file, "'<label> <category>' lines");
  e->add_option("--kind", estimate.kind, "node or hyperedge (composition)")->capture_default_str();
  e->add_option("--burn-in", estimate.burn_in, "Override the burn-in stored in the sample");
  e->add_option("--preset", estimate.preset, "openalex: burn-in 5000");
  e->add_option("--format", estimate.format, "json or csv")->capture_default_str();
  e->add_option("--output,-o", estimate.output, "Report file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check the non-backtracking chain on a small hypergraph");
  add_input_options(v, verify.input, false);
  v->add_flag("--lcc", verify.lcc, "Verify the largest connected component");
  v->add_option("--tol", verify.tol, "Tolerance")->capture_default_str();
  v->add_option("--dump-matrix", verify.dump_matrix, "Write the chain as row col value lines");
  v->add_option("--output,-o", verify.output, "Report file (default stdout)");

  NrmseArgs nrmse_args;
  auto* n = app.add_subcommand("nrmse", "Repeated-walk NRMSE experiment");
  add_input_options(n, nrmse_args.input, true);
  n->add_option("--config", nrmse_args.config, "key=value experiment file");
  n->add_option("--walks", nrmse_args.walks, "Comma-separated walk kinds");
  n->add_option("--lengths", nrmse_args.lengths, "Comma-separated lengths r");
  n->add_option("--runs", nrmse_args.runs, "Independent runs per point");
  n->add_option("--metrics", nrmse_args.metrics, "mean-degree,mean-size,degree-pmf,size-pmf");
  n->add_option("--seed", nrmse_args.seed, "Master seed");
  n->add_option("--burn-in", nrmse_args.burn_in, "Burn-in per walk");
  n->add_option("--threads", nrmse_args.threads, "Worker threads (0 = all cores)");
  n->add_option("--output,-o", nrmse_args.output, "Results CSV (default stdout)");
  n->add_option("--per-value-output", nrmse_args.per_value_output, "Per degree/size NRMSE CSV");
  n->add_option("--queries-output", nrmse_args.queries_output, "Query and repetition CSV");

  StatsArgs stats;
  auto* st = app.add_subcommand("stats", "Basic hypergraph statistics");
  add_input_options(st, stats.input, true);
  st->add_flag("--json", stats.json, "Full-precision JSON");

  ConvertArgs convert;
  auto* c = app.add_subcommand("convert", "Write a dataset as a canonical hyperedge list");
  add_input_options(c, convert.input, false);
  c->add_option("--output,-o", convert.output, "Output file (default stdout)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*s) return cmd_sample(sample, out, err);
    if (*e) return cmd_estimate(estimate, out, err);
    if (*v) return cmd_verify(verify, out, err);
    if (*n) return cmd_nrmse(nrmse_args, out, err);
    if (*st) return cmd_stats(stats, out, err);
    if (*c) return cmd_convert(convert, out, err);
  } catch (const UsageError& u) {
    err << "usage error: " << u.message << '\n';
    return kUsage;
  } catch (const Error& failure) {
    err << "error: " << failure.what() << '\n';
    return exit_code_for(failure.code());
  }
  return kUsage;
}

}  // namespace hyperwalk::cli
