// bicis command line: top-r (alpha,beta)-influential community search over
// vertex-weighted bipartite graphs. Talks to the core exclusively through the
// C API in bicis.h.
//
// Subcommands:
//   run     load a graph, run one algorithm, emit JSON lines or a CSV row
//   gen     write a random bipartite graph as edge + weight files
//   oracle  exhaustive enumeration (small graphs), JSON lines + diagnostics
//   bench   sweep alpha | beta | r | sample-fraction, one CSV row per run
//
// Exit codes: 0 ok, 2 parse error, 3 validation error, 4 usage error,
// 5 io error, 6 size guard exceeded, 10 timed out with partial results.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicis.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitUsage = 4;
constexpr int kExitIo = 5;
constexpr int kExitLimit = 6;
constexpr int kExitTimeout = 10;

constexpr const char* kCsvHeader =
    "algo,alpha,beta,r,seed,n_u,n_v,m,time_ms,nodes,cuts_ub1,cuts_ub2,cuts_ub3,slim_skips,"
    "timed_out,influences";

int exit_code_for(bicis_status status) {
  switch (status) {
    case BICIS_OK: return kExitOk;
    case BICIS_ERR_PARSE: return kExitParse;
    case BICIS_ERR_VALIDATION: return kExitValidation;
    case BICIS_ERR_USAGE: return kExitUsage;
    case BICIS_ERR_LIMIT: return kExitLimit;
    case BICIS_ERR_IO: return kExitIo;
    case BICIS_ERR_INTERNAL: return kExitUsage;
  }
  return kExitUsage;
}

[[noreturn]] void die(bicis_status status) {
  std::cerr << "bicis: " << bicis_status_name(status) << ": " << bicis_last_error() << "\n";
  std::exit(exit_code_for(status));
}

struct GraphPtr {
  bicis_graph* g = nullptr;
  GraphPtr() = default;
  explicit GraphPtr(bicis_graph* p) : g(p) {}
  GraphPtr(GraphPtr&& o) noexcept : g(o.g) { o.g = nullptr; }
  GraphPtr& operator=(GraphPtr&& o) noexcept {
    std::swap(g, o.g);
    return *this;
  }
  GraphPtr(const GraphPtr&) = delete;
  ~GraphPtr() { bicis_graph_free(g); }
};

struct ResultPtr {
  bicis_result* r = nullptr;
  ResultPtr() = default;
  ResultPtr(ResultPtr&& o) noexcept : r(o.r) { o.r = nullptr; }
  ResultPtr& operator=(ResultPtr&& o) noexcept {
    std::swap(r, o.r);
    return *this;
  }
  ResultPtr(const ResultPtr&) = delete;
  ~ResultPtr() { bicis_result_free(r); }
};

struct CommonOptions {
  std::string input;
  std::string weights;
  std::optional<std::uint64_t> gen_weights_seed;
  std::uint64_t w_max = 100;
  std::string algo = "basic";
  std::uint32_t alpha = 1;
  std::uint32_t beta = 1;
  std::uint32_t r = 10;
  std::vector<std::string> bounds;
  double time_limit_s = 3600.0;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
};

void add_common_options(CLI::App* cmd, CommonOptions* opt, bool with_algo) {
  cmd->add_option("--input", opt->input, "edge file (1-based '<u> <v>' lines, '%' comments)")
      ->required();
  cmd->add_option("--weights", opt->weights, "weight file ('U <id> <w>' / 'V <id> <w>' lines)");
  cmd->add_option("--gen-weights-seed", opt->gen_weights_seed,
                  "ignore the weight file and draw uniform weights from this seed");
  cmd->add_option("--wmax", opt->w_max, "upper bound of generated weights (default 100)");
  if (with_algo) {
    cmd->add_option("--algo", opt->algo, "basic | slimtree | upperbound | newfra | pruning | oracle")
        ->check(CLI::IsMember({"basic", "slimtree", "upperbound", "newfra", "pruning", "oracle"}));
    cmd->add_option("--bounds", opt->bounds,
                    "bounds for the upperbound search, comma list from ub1,ub2,ub3")
        ->delimiter(',');
    cmd->add_option("--time-limit", opt->time_limit_s,
                    "wall-clock budget in seconds, 0 = unlimited (default 3600)");
    cmd->add_option("--format", opt->format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--top", opt->r, "number of communities to report (default 10)");
  }
  cmd->add_option("--alpha", opt->alpha, "minimum degree of upper-layer vertices")->required();
  cmd->add_option("--beta", opt->beta, "minimum degree of lower-layer vertices")->required();
  cmd->add_option("--output", opt->output, "output path (default: standard output)");
  cmd->add_option("--seed", opt->seed, "seed for sampling sweeps (default 0)");
}

GraphPtr load_graph(const CommonOptions& opt) {
  if (opt.gen_weights_seed && !opt.weights.empty()) {
    std::cerr << "bicis: usage error: --weights and --gen-weights-seed are exclusive\n";
    std::exit(kExitUsage);
  }
  bicis_graph* raw = nullptr;
  bicis_status st =
      bicis_graph_load(opt.input.c_str(), opt.weights.empty() ? nullptr : opt.weights.c_str(), &raw);
  if (st != BICIS_OK) die(st);
  GraphPtr graph(raw);
  if (opt.gen_weights_seed) {
    bicis_graph* reweighted = nullptr;
    st = bicis_graph_reweight(graph.g, *opt.gen_weights_seed, opt.w_max, &reweighted);
    if (st != BICIS_OK) die(st);
    graph = GraphPtr(reweighted);
  }
  return graph;
}

bicis_algo algo_from_name(const std::string& name) {
  static const std::map<std::string, bicis_algo> table{
      {"basic", BICIS_ALGO_BASIC},           {"slimtree", BICIS_ALGO_SLIMTREE},
      {"upperbound", BICIS_ALGO_UPPERBOUND}, {"newfra", BICIS_ALGO_NEWFRA},
      {"pruning", BICIS_ALGO_PRUNING},       {"oracle", BICIS_ALGO_ORACLE},
  };
  return table.at(name);
}

std::uint32_t bounds_mask(const std::vector<std::string>& names) {
  if (names.empty()) return BICIS_BOUND_ALL;
  std::uint32_t mask = 0;
  for (const auto& n : names) {
    if (n == "ub1") {
      mask |= BICIS_BOUND_UB1;
    } else if (n == "ub2") {
      mask |= BICIS_BOUND_UB2;
    } else if (n == "ub3") {
      mask |= BICIS_BOUND_UB3;
    } else {
      std::cerr << "bicis: usage error: unknown bound '" << n << "'\n";
      std::exit(kExitUsage);
    }
  }
  return mask;
}

bicis_params params_from(const CommonOptions& opt) {
  bicis_params p{};
  p.alpha = opt.alpha;
  p.beta = opt.beta;
  p.r = opt.r;
  p.bounds = bounds_mask(opt.bounds);
  p.time_limit_ms =
      opt.time_limit_s <= 0 ? 0 : static_cast<std::int64_t>(opt.time_limit_s * 1000.0);
  p.algo = algo_from_name(opt.algo);
  return p;
}

struct OutputStream {
  std::ofstream file;
  std::ostream* out = &std::cout;

  explicit OutputStream(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) {
      std::cerr << "bicis: io error: cannot write " << path << "\n";
      std::exit(kExitIo);
    }
    out = &file;
  }
  std::ostream& get() { return *out; }
};

json community_record(const bicis_result* result, std::size_t index) {
  json rec;
  rec["rank"] = index + 1;
  char buf[128];
  bicis_result_influence(result, index, buf, sizeof buf);
  rec["influence"] = buf;
  rec["influence_decimal"] = bicis_result_influence_value(result, index);
  const std::size_t nu = bicis_result_upper_ids(result, index, nullptr, 0);
  std::vector<std::uint32_t> ids(nu);
  bicis_result_upper_ids(result, index, ids.data(), ids.size());
  rec["upper"] = ids;
  const std::size_t nv = bicis_result_lower_ids(result, index, nullptr, 0);
  ids.resize(nv);
  bicis_result_lower_ids(result, index, ids.data(), ids.size());
  rec["lower"] = ids;
  return rec;
}

std::string joined_influences(const bicis_result* result) {
  std::string out;
  for (std::size_t i = 0; i < bicis_result_size(result); ++i) {
    char buf[128];
    bicis_result_influence(result, i, buf, sizeof buf);
    if (i > 0) out += ';';
    out += buf;
  }
  return out;
}

std::uint64_t primary_counter(const std::string& algo, const bicis_stats& stats) {
  if (algo == "newfra" || algo == "pruning") return stats.vertices_expanded;
  if (algo == "oracle") return stats.oracle_subsets_scanned;
  return stats.nodes_expanded;
}

void write_csv_row(std::ostream& out, const std::string& algo, const bicis_params& p,
                   std::uint64_t seed, const bicis_graph* g, std::int64_t time_ms,
                   const bicis_stats& stats, const bicis_result* result) {
  out << algo << ',' << p.alpha << ',' << p.beta << ',' << p.r << ',' << seed << ','
      << bicis_graph_upper_count(g) << ',' << bicis_graph_lower_count(g) << ','
      << bicis_graph_edge_count(g) << ',' << time_ms << ',' << primary_counter(algo, stats) << ','
      << stats.cuts_ub1 << ',' << stats.cuts_ub2 << ',' << stats.cuts_ub3 << ','
      << stats.slim_skips << ',' << (stats.timed_out ? 1 : 0) << ',' << joined_influences(result)
      << '\n';
}

// Runs one algorithm; wall time is measured here for the oracle selector,
// whose stats carry no timing.
std::pair<ResultPtr, std::int64_t> run_algo(const bicis_graph* g, const bicis_params& p) {
  ResultPtr result;
  const auto t0 = std::chrono::steady_clock::now();
  const bicis_status st = bicis_search(g, &p, &result.r);
  const auto wall =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  if (st != BICIS_OK) die(st);
  bicis_stats stats{};
  bicis_result_stats(result.r, &stats);
  const std::int64_t time_ms = stats.wall_ms > 0 ? stats.wall_ms : wall.count();
  return {std::move(result), time_ms};
}

int cmd_run(const CommonOptions& opt) {
  const GraphPtr graph = load_graph(opt);
  const bicis_params params = params_from(opt);
  auto [result, time_ms] = run_algo(graph.g, params);
  bicis_stats stats{};
  bicis_result_stats(result.r, &stats);

  OutputStream sink(opt.output);
  if (opt.format == "csv") {
    sink.get() << kCsvHeader << '\n';
    write_csv_row(sink.get(), opt.algo, params, opt.gen_weights_seed.value_or(0), graph.g, time_ms,
                  stats, result.r);
  } else {
    for (std::size_t i = 0; i < bicis_result_size(result.r); ++i) {
      sink.get() << community_record(result.r, i).dump() << '\n';
    }
    json st;
    st["type"] = "stats";
    st["algo"] = opt.algo;
    st["alpha"] = params.alpha;
    st["beta"] = params.beta;
    st["r"] = params.r;
    st["n_u"] = bicis_graph_upper_count(graph.g);
    st["n_v"] = bicis_graph_lower_count(graph.g);
    st["m"] = bicis_graph_edge_count(graph.g);
    st["communities"] = bicis_result_size(result.r);
    st["nodes"] = primary_counter(opt.algo, stats);
    st["core_computations"] = stats.core_computations;
    st["cuts_ub1"] = stats.cuts_ub1;
    st["cuts_ub2"] = stats.cuts_ub2;
    st["cuts_ub3"] = stats.cuts_ub3;
    st["slim_skips"] = stats.slim_skips;
    st["prune_breaks"] = stats.prune_breaks;
    st["timed_out"] = stats.timed_out != 0;
    sink.get() << st.dump() << '\n';
  }
  std::cerr << "bicis: " << opt.algo << " finished in " << time_ms << " ms\n";
  return stats.timed_out ? kExitTimeout : kExitOk;
}

int cmd_oracle(const CommonOptions& opt) {
  const GraphPtr graph = load_graph(opt);
  ResultPtr result;
  const bicis_status st = bicis_enumerate(graph.g, opt.alpha, opt.beta, &result.r);
  if (st != BICIS_OK) die(st);
  bicis_stats stats{};
  bicis_result_stats(result.r, &stats);

  OutputStream sink(opt.output);
  for (std::size_t i = 0; i < bicis_result_size(result.r); ++i) {
    sink.get() << community_record(result.r, i).dump() << '\n';
  }
  json diag;
  diag["type"] = "diagnostics";
  diag["alpha"] = opt.alpha;
  diag["beta"] = opt.beta;
  diag["n_u"] = bicis_graph_upper_count(graph.g);
  diag["n_v"] = bicis_graph_lower_count(graph.g);
  diag["m"] = bicis_graph_edge_count(graph.g);
  diag["subsets_scanned"] = stats.oracle_subsets_scanned;
  diag["candidates"] = stats.oracle_candidates;
  diag["communities"] = bicis_result_size(result.r);
  sink.get() << diag.dump() << '\n';
  return kExitOk;
}

struct GenOptions {
  std::uint32_t nu = 0;
  std::uint32_t nv = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::uint64_t w_max = 100;
  std::string output;
  std::string weights;
};

int cmd_gen(const GenOptions& opt) {
  bicis_graph* raw = nullptr;
  bicis_status st = bicis_graph_random(opt.nu, opt.nv, opt.m, opt.seed, opt.w_max, &raw);
  if (st != BICIS_OK) die(st);
  GraphPtr graph(raw);
  st = bicis_graph_write(graph.g, opt.output.c_str(), opt.weights.c_str());
  if (st != BICIS_OK) die(st);
  std::cerr << "bicis: wrote " << opt.output << " (" << bicis_graph_edge_count(graph.g)
            << " edges) and " << opt.weights << "\n";
  return kExitOk;
}

struct BenchOptions {
  std::string vary = "alpha";
  std::vector<std::string> values;
  std::uint32_t reps = 1;
};

int cmd_bench(const CommonOptions& opt, const BenchOptions& bench) {
  if (bench.values.empty()) {
    std::cerr << "bicis: validation error: --values must be nonempty\n";
    return kExitValidation;
  }
  std::vector<double> fractions;
  std::vector<std::uint32_t> ints;
  for (const auto& v : bench.values) {
    try {
      if (bench.vary == "sample-fraction") {
        const double f = std::stod(v);
        if (!(f > 0.0) || f > 1.0) {
          std::cerr << "bicis: validation error: sample fraction " << v << " not in (0,1]\n";
          return kExitValidation;
        }
        fractions.push_back(f);
      } else {
        ints.push_back(static_cast<std::uint32_t>(std::stoul(v)));
      }
    } catch (const std::exception&) {
      std::cerr << "bicis: validation error: bad sweep value '" << v << "'\n";
      return kExitValidation;
    }
  }

  const GraphPtr base = load_graph(opt);
  OutputStream sink(opt.output);
  sink.get() << kCsvHeader << '\n';

  const std::size_t count = bench.vary == "sample-fraction" ? fractions.size() : ints.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::uint32_t rep = 0; rep < bench.reps; ++rep) {
      bicis_params params = params_from(opt);
      const bicis_graph* g = base.g;
      GraphPtr sampled;
      std::uint64_t row_seed = opt.gen_weights_seed.value_or(0);
      if (bench.vary == "alpha") {
        params.alpha = ints[i];
      } else if (bench.vary == "beta") {
        params.beta = ints[i];
      } else if (bench.vary == "r") {
        params.r = ints[i];
      } else {
        row_seed = opt.seed + rep;
        bicis_graph* raw = nullptr;
        const bicis_status st = bicis_graph_sample(base.g, fractions[i], row_seed, &raw);
        if (st != BICIS_OK) die(st);
        sampled = GraphPtr(raw);
        g = sampled.g;
      }
      auto [result, time_ms] = run_algo(g, params);
      bicis_stats stats{};
      bicis_result_stats(result.r, &stats);
      write_csv_row(sink.get(), opt.algo, params, row_seed, g, time_ms, stats, result.r);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"top-r influential community search in vertex-weighted bipartite graphs"};
  app.require_subcommand(1);

  CommonOptions run_opt;
  auto* run = app.add_subcommand("run", "run one algorithm on a graph");
  add_common_options(run, &run_opt, /*with_algo=*/true);

  CommonOptions oracle_opt;
  auto* oracle = app.add_subcommand("oracle", "exhaustively enumerate influential communities");
  add_common_options(oracle, &oracle_opt, /*with_algo=*/false);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a random weighted bipartite graph");
  gen->add_option("--nu", gen_opt.nu, "upper-layer vertex count")->required();
  gen->add_option("--nv", gen_opt.nv, "lower-layer vertex count")->required();
  gen->add_option("--m", gen_opt.m, "edge count (distinct, uniform)")->required();
  gen->add_option("--seed", gen_opt.seed, "generator seed")->required();
  gen->add_option("--wmax", gen_opt.w_max, "weights drawn uniformly from [1, wmax]");
  gen->add_option("--output", gen_opt.output, "edge file to write")->required();
  gen->add_option("--weights", gen_opt.weights, "weight file to write")->required();

  CommonOptions bench_opt;
  BenchOptions bench_sweep;
  auto* bench = app.add_subcommand("bench", "sweep a parameter, one CSV row per run");
  add_common_options(bench, &bench_opt, /*with_algo=*/true);
  bench->add_option("--vary", bench_sweep.vary, "alpha | beta | r | sample-fraction")
      ->check(CLI::IsMember({"alpha", "beta", "r", "sample-fraction"}));
  bench->add_option("--values", bench_sweep.values, "sweep values, comma separated")
      ->delimiter(',')
      ->required();
  bench->add_option("--reps", bench_sweep.reps, "repetitions per value (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (run->parsed()) return cmd_run(run_opt);
  if (oracle->parsed()) return cmd_oracle(oracle_opt);
  if (gen->parsed()) return cmd_gen(gen_opt);
  return cmd_bench(bench_opt, bench_sweep);
}
