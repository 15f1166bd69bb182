// boxcover command-line front end.
//
// Exit codes: 0 success, 1 input parse failure, 2 usage/config/missing file,
// 3 an algorithm produced an invalid cover (internal error).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boxcover/benchmark.hpp"
#include "boxcover/burners.hpp"
#include "boxcover/config.hpp"
#include "boxcover/dimension.hpp"
#include "boxcover/graph.hpp"
#include "boxcover/netstats.hpp"
#include "boxcover/oracle.hpp"

namespace fs = std::filesystem;
using namespace boxcover;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

int thread_count(int fallback) {
  if (const char* env = std::getenv("BOXCOVER_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return fallback;
}

// A file path or gen:<spec>. Returns the largest component.
Graph load_network(const std::string& source) {
  if (source.rfind("gen:", 0) == 0) return generate(source.substr(4));
  if (!fs::exists(source)) throw UsageError("no such file: " + source);
  return largest_component(load_edge_list_file(source));
}

std::string network_id(const std::string& source) {
  if (source.rfind("gen:", 0) == 0) {
    std::string id = source.substr(4);
    for (char& ch : id)
      if (ch == ':') ch = '_';
    return id;
  }
  return fs::path(source).stem().string();
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

AlgorithmConfig resolve_algorithm(const std::string& id) {
  if (id == "greedy") return builtin_algorithm("gre");
  if (id == "merge") return builtin_algorithm("mer");
  return builtin_algorithm(id);
}

int cmd_stats(const std::string& path, bool header) {
  const Graph g = load_network(path);
  const auto dm = all_pairs_distances(g);
  const auto s = basic_stats(g, dm);
  if (header) std::cout << "n,e,diameter,gini,clustering\n";
  std::cout << s.n << ',' << s.e << ',' << s.diameter << ',' << fixed2(s.gini) << ','
            << fixed2(s.clustering) << '\n';
  return 0;
}

struct CoverArgs {
  std::string path, algorithm, out;
  std::optional<int> rb, lb_impl, lb;
  std::uint64_t seed = 1;
  std::vector<std::string> params;
};

int cmd_cover(const CoverArgs& a) {
  AlgorithmConfig alg;
  try {
    alg = resolve_algorithm(a.algorithm);
    for (const auto& kv : a.params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("parameter must be key=value: " + kv);
      apply_parameter(alg, kv.substr(0, eq), kv.substr(eq + 1));
    }
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  if (!alg.produces_cover()) throw UsageError("'" + alg.id + "' is an estimator; use bench or dim");
  const int given = int(a.rb.has_value()) + int(a.lb_impl.has_value()) + int(a.lb.has_value());
  if (given != 1) throw UsageError("give exactly one of --rb, --lb-impl, --lb");
  SizeSpec size = a.rb ? SizeSpec::radius(*a.rb) : a.lb_impl ? SizeSpec::impl(*a.lb_impl) : SizeSpec::eval(*a.lb);
  if (size.value < (size.kind == SizeKind::EvalDiameter ? 1 : 0)) throw UsageError("box size out of range");
  try {
    size = native_size(alg, size);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  const Graph g = load_network(a.path);
  const auto dm = all_pairs_distances(g);
  Rng rng(a.seed);
  const Cover c = run_cover(alg, g, dm, size, rng);
  const auto report = validate_cover(c, dm);
  if (!report.valid()) throw InternalError("invalid cover: " + report.describe());
  const std::string json = cover_to_json(c, g);
  if (a.out.empty()) {
    std::cout << json << '\n';
  } else {
    std::ofstream out(a.out);
    if (!out) throw UsageError("cannot write " + a.out);
    out << json << '\n';
  }
  return 0;
}

nlohmann::json algorithm_json(const AlgorithmConfig& a) {
  nlohmann::json j{{"id", a.id}, {"convention", a.radius_based() ? "radius" : "diameter"}};
  switch (a.kind) {
    case AlgorithmKind::Mcwr: j["p"] = a.mix; break;
    case AlgorithmKind::SimulatedAnnealing:
      j["k1"] = a.sa.k1; j["k2"] = a.sa.k2; j["k3"] = a.sa.k3; j["T0"] = a.sa.t0; j["c"] = a.sa.cooling;
      break;
    case AlgorithmKind::DifferentialEvolution:
      j["p"] = a.de.population; j["f"] = a.de.weight; j["c"] = a.de.crossover; j["g"] = a.de.generations;
      break;
    case AlgorithmKind::ParticleSwarm:
      j["g"] = a.pso.generations; j["p"] = a.pso.particles; j["c1"] = a.pso.c1; j["c2"] = a.pso.c2;
      break;
    case AlgorithmKind::Sampling:
      j["n"] = a.samples;
      j["inner"] = a.inner == SamplingInner::RandomSequential ? "random_sequential" : "maximal_box";
      j["strategy"] = a.strategy == SelectionStrategy::SmallBoxRemoval ? "small_box_removal" : "big_box_first";
      break;
    default: break;
  }
  return j;
}

void write_dimension_row(std::ostream& out, const std::string& network, const std::string& alg,
                         const std::vector<ScalingPoint>& points) {
  out << network << ',' << alg << ',';
  try {
    const auto fit = fit_dimension(points);
    out << format_number(fit.dimension) << ',' << format_number(fit.sse) << ','
        << format_number(fit.range.min) << ',' << format_number(fit.range.max) << ',' << fit.n_points;
  } catch (const FitRefused&) {
    out << "-1,nan,";
    if (points.empty()) out << "nan,nan,0";
    else out << format_number(points.front().box_size) << ',' << format_number(points.back().box_size) << ',' << points.size();
  }
  out << '\n';
}

void write_suggestion_row(std::ostream& out, const std::string& network, const std::string& alg,
                          const std::vector<ScalingPoint>& points) {
  out << network << ',' << alg << ',';
  try {
    const auto s = auto_range(points);
    out << format_number(s.fit.dimension) << ',' << format_number(s.fit.sse) << ','
        << format_number(s.fit.range.min) << ',' << format_number(s.fit.range.max) << ','
        << s.fit.n_points << ',' << (s.low_confidence ? 1 : 0);
  } catch (const Error&) {
    out << "-1,nan,nan,nan," << points.size() << ",1";
  }
  out << '\n';
}

int cmd_bench(const std::string& config_path, std::optional<std::string> output_override) {
  RunConfig cfg;
  try {
    cfg = load_run_config(config_path);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  if (output_override) cfg.output_dir = *output_override;
  const int threads = thread_count(cfg.threads);

  std::vector<std::pair<std::string, Graph>> networks;
  for (const auto& src : cfg.networks) {
    try {
      networks.emplace_back(network_id(src), load_network(src));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  fs::create_directories(cfg.output_dir);
  auto open = [&](const std::string& name) {
    std::ofstream f(fs::path(cfg.output_dir) / name);
    if (!f) throw UsageError("cannot write into " + cfg.output_dir);
    return f;
  };
  auto records_csv = open("records.csv");
  auto scores_csv = open("scores.csv");
  auto summary_csv = open("summary.csv");
  auto dimension_csv = open("dimension.csv");
  auto suggested_csv = open("dimension_suggested.csv");
  auto stats_csv = open("stats.csv");
  records_csv << "network,algorithm,eval_size,rep,n_boxes,runtime_s,seed\n";
  scores_csv << "network,algorithm,eval_size,mean_n_boxes,base_n_boxes,delta_mean,mean_p,std_p,"
                "mean_norm_runtime,accepted\n";
  summary_csv << "network,algorithm,accepted_sizes,mean_p,intrinsic_std,total_std,mean_norm_runtime\n";
  dimension_csv << "network,algorithm,d_B,sse,l_min,l_max,n_points\n";
  suggested_csv << "network,algorithm,d_B,sse,l_min,l_max,n_points,low_confidence\n";
  stats_csv << "network,n,e,diameter,gini,clustering\n";

  std::vector<std::string> unscored;
  for (const auto& a : cfg.algorithms)
    if (!a.produces_cover()) unscored.push_back(a.id);

  nlohmann::json meta{{"tool", "boxcover"},
                      {"version", kVersion},
                      {"seed", cfg.seed},
                      {"repetitions", cfg.repetitions},
                      {"threads", threads},
                      {"log_base", "e"},
                      {"size_grid", "radius 1..diameter, at most 15 evenly spaced; diameter algorithms at 2r"},
                      {"t_base_includes_preprocessing", true}};
  for (const auto& a : cfg.algorithms) meta["algorithms"].push_back(algorithm_json(a));

  std::size_t warning_count = 0;
  for (const auto& [id, g] : networks) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto dm = all_pairs_distances(g);
    const double apsp = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto stats = basic_stats(g, dm);

    BenchOptions opts;
    opts.repetitions = cfg.repetitions;
    opts.seed = cfg.seed;
    opts.radii = cfg.radii;
    opts.threads = threads;
    opts.apsp_seconds = apsp;
    const auto result = run_benchmark(id, g, dm, cfg.algorithms, opts);
    for (const auto& w : result.warnings) {
      std::cerr << "warning: " << id << '/' << w.algorithm << ": " << w.message << '\n';
      ++warning_count;
    }

    ScoreTable table;
    try {
      table = score(result.records, baseline(result.records), unscored);
    } catch (const Error& e) {
      std::cerr << "warning: " << id << ": no scores (" << e.what() << ")\n";
      ++warning_count;
    }

    stats_csv << id << ',' << stats.n << ',' << stats.e << ',' << stats.diameter << ','
              << format_number(stats.gini) << ',' << format_number(stats.clustering) << '\n';
    write_records_csv(records_csv, result.records, false);
    write_scores_csv(scores_csv, table, false);
    write_summary_csv(summary_csv, table, false);
    for (const auto& [alg, points] : scaling_series(result.records)) {
      write_dimension_row(dimension_csv, id, alg, points);
      write_suggestion_row(suggested_csv, id, alg, points);
    }
    meta["networks"].push_back({{"id", id},
                                {"n", stats.n},
                                {"diameter", stats.diameter},
                                {"radii", result.radii},
                                {"apsp_seconds", apsp}});
  }
  meta["warnings"] = warning_count;
  open("metadata.json") << meta.dump(2) << '\n';
  if (warning_count) std::cerr << warning_count << " warning(s)\n";
  return 0;
}

std::vector<ScalingPoint> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<ScalingPoint> points;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    ScalingPoint p;
    if (!(fields >> p.box_size >> p.boxes)) {
      if (lineno == 1) continue;  // header
      throw ParseError(lineno, "expected `l_B,N_B`");
    }
    points.push_back(p);
  }
  return points;
}

int cmd_dim(const std::string& path, std::optional<double> lmin, std::optional<double> lmax, bool suggest) {
  const auto points = read_points(path);
  std::optional<SizeRange> range;
  if (lmin || lmax) range = SizeRange{lmin.value_or(0.0), lmax.value_or(1e300)};
  std::cout << "d_B,sse,l_min,l_max,n_points\n";
  try {
    const auto fit = fit_dimension(points, range);
    std::cout << format_number(fit.dimension) << ',' << format_number(fit.sse) << ','
              << format_number(fit.range.min) << ',' << format_number(fit.range.max) << ','
              << fit.n_points << '\n';
  } catch (const FitRefused& e) {
    std::cout << "-1,nan,nan,nan,0\n";
    std::cerr << "fit refused: " << e.what() << '\n';
  }
  if (suggest) {
    const auto s = auto_range(points);
    std::cout << "# suggested range " << format_number(s.fit.range.min) << ".."
              << format_number(s.fit.range.max) << " d_B=" << format_number(s.fit.dimension)
              << " sse=" << format_number(s.fit.sse) << (s.low_confidence ? " (low confidence)" : "")
              << '\n';
  }
  return 0;
}

int cmd_oracle(const std::string& source, int lb_impl) {
  const Graph g = load_network(source);
  const auto dm = all_pairs_distances(g);
  const auto r = exact_min_cover(dm, lb_impl);
  std::cout << "optimum " << r.optimum << '\n' << cover_to_json(r.witness, g) << '\n';
  return 0;
}

int cmd_gen(const std::string& spec) {
  write_edge_list(std::cout, generate(spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Box-covering algorithms for fractal network analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string path;
  bool header = false;
  auto* stats = app.add_subcommand("stats", "Print n,e,diameter,gini,clustering as one CSV row");
  stats->add_option("graph", path, "Edge list")->required();
  stats->add_flag("--header", header, "Print the column header first");

  CoverArgs cover_args;
  auto* cover = app.add_subcommand("cover", "Cover a graph with one algorithm and print JSON");
  cover->add_option("graph", cover_args.path, "Edge list")->required();
  cover->add_option("algorithm", cover_args.algorithm, "Algorithm id")->required();
  cover->add_option("--rb", cover_args.rb, "Box radius");
  cover->add_option("--lb-impl", cover_args.lb_impl, "Box diameter bound l̃ (d <= l̃)");
  cover->add_option("--lb", cover_args.lb, "Box size l_B (d < l_B)");
  cover->add_option("--seed", cover_args.seed, "Random seed");
  cover->add_option("--out", cover_args.out, "Write JSON here instead of stdout");
  cover->add_option("--param", cover_args.params, "Hyperparameter override key=value");

  std::string config;
  std::optional<std::string> output;
  auto* bench = app.add_subcommand("bench", "Run the benchmark described by a config file");
  bench->add_option("config", config, "INI config")->required();
  bench->add_option("--out", output, "Output directory (overrides the config)");

  std::optional<double> lmin, lmax;
  bool suggest = false;
  auto* dim = app.add_subcommand("dim", "Fit the box dimension to l_B,N_B points");
  dim->add_option("points", path, "CSV with l_B,N_B rows")->required();
  dim->add_option("--lmin", lmin);
  dim->add_option("--lmax", lmax);
  dim->add_flag("--suggest", suggest, "Also print the suggested fitting range");

  int lb_impl = 1;
  auto* oracle = app.add_subcommand("oracle", "Exact minimum cover of a small graph");
  oracle->add_option("graph", path, "Edge list or gen:<spec>")->required();
  oracle->add_option("--lb-impl", lb_impl, "Box diameter bound l̃")->required();

  std::string spec;
  auto* gen = app.add_subcommand("gen", "Print a generated graph as an edge list");
  gen->add_option("spec", spec, "path:N | cycle:N | star:N | grid:WxH | complete:N")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*stats) return cmd_stats(path, header);
    if (*cover) return cmd_cover(cover_args);
    if (*bench) return cmd_bench(config, output);
    if (*dim) return cmd_dim(path, lmin, lmax, suggest);
    if (*oracle) return cmd_oracle(path, lb_impl);
    if (*gen) return cmd_gen(spec);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
