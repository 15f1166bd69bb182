#include "boxcover/benchmark.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <tuple>

#include "boxcover/burners.hpp"
#include "boxcover/metaheuristics.hpp"
#include "boxcover/overlap_sampling.hpp"

namespace boxcover {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t hash_string(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

template <typename F>
void parallel_for(int n, int threads, F&& body) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

double mean(std::span<const double> v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
}

// Population standard deviation.
double stddev(std::span<const double> v) {
  if (v.empty()) return 0.0;
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / double(v.size()));
}

}  // namespace

SizeSpec native_size(const AlgorithmConfig& alg, SizeSpec size) {
  if (alg.radius_based()) {
    if (size.kind == SizeKind::ImplDiameter)
      throw Error("algorithm '" + alg.id + "' is radius-based; give a radius or an odd box size");
    return equivalent_radius(size);
  }
  if (size.kind == SizeKind::Radius)
    throw Error("algorithm '" + alg.id + "' is diameter-based; give a diameter size");
  return equivalent_impl_size(size);
}

Cover run_cover(const AlgorithmConfig& alg, const Graph& g, const DistanceMatrix& dm,
                SizeSpec size, Rng& rng, const Graph* aux) {
  const SizeSpec native = native_size(alg, size);
  if (native != size) throw Error("size must be given in the algorithm's own convention");
  const int s = size.value;
  if (s < 0) throw Error("negative box size");
  std::optional<Graph> own_aux;
  auto aux_graph = [&]() -> const Graph& {
    if (aux) return *aux;
    if (!own_aux) own_aux = auxiliary_graph(dm, s);
    return *own_aux;
  };
  switch (alg.kind) {
    case AlgorithmKind::Greedy:
      return greedy_coloring(aux_graph(), s, rng);
    case AlgorithmKind::RandomSequential:
      return random_sequential(dm, s, rng);
    case AlgorithmKind::Cbb:
      return cbb(dm, s, rng);
    case AlgorithmKind::Memb:
      return memb(g, dm, s, rng);
    case AlgorithmKind::Remcc:
      return remcc(g, dm, s);
    case AlgorithmKind::Mcwr:
      return mcwr(g, dm, s, alg.mix, rng);
    case AlgorithmKind::Merge: {
      if (s < 1) throw Error("merge needs l̃ >= 1");
      return merge_algorithm(dm, s, rng).back();
    }
    case AlgorithmKind::SimulatedAnnealing:
      return simulated_annealing(g, dm, s, alg.sa, rng).cover;
    case AlgorithmKind::DifferentialEvolution:
      return differential_evolution(aux_graph(), s, alg.de, rng).cover;
    case AlgorithmKind::ParticleSwarm:
      return pso(g, dm, aux_graph(), s, alg.pso, rng).cover;
    case AlgorithmKind::Obca:
      return obca(g, dm, s);
    case AlgorithmKind::Fuzzy:
      throw Error("fuzzy is an estimator and produces no cover");
    case AlgorithmKind::Sampling:
      if (alg.inner == SamplingInner::RandomSequential)
        return select_boxes(random_sequential_proposals(dm, s, alg.samples, rng), alg.strategy,
                            dm.size(), SizeSpec::radius(s));
      return select_boxes(maximal_box_sampling(dm, s, alg.samples, rng), alg.strategy, dm.size(),
                          SizeSpec::impl(s));
  }
  throw Error("unhandled algorithm kind");
}

std::vector<int> radius_grid(int diameter, std::size_t max_points) {
  if (diameter < 1) return {1};
  std::vector<int> grid;
  const auto d = static_cast<std::size_t>(diameter);
  if (d <= max_points || max_points < 2) {
    for (int r = 1; r <= diameter; ++r) grid.push_back(r);
    return grid;
  }
  for (std::size_t i = 0; i < max_points; ++i) {
    const double pos = double(i) * double(d - 1) / double(max_points - 1);
    const int r = 1 + static_cast<int>(std::lround(pos));
    if (grid.empty() || grid.back() != r) grid.push_back(r);
  }
  return grid;
}

std::uint64_t cell_seed(std::uint64_t master, const std::string& network,
                        const std::string& algorithm, int eval_size, int rep) {
  std::uint64_t s = mix_seed(master);
  s = mix_seed(s ^ hash_string(network));
  s = mix_seed(s ^ hash_string(algorithm));
  s = mix_seed(s ^ static_cast<std::uint64_t>(eval_size));
  return mix_seed(s ^ static_cast<std::uint64_t>(rep));
}

void sort_records(std::vector<BenchRecord>& records) {
  std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::tie(a.network, a.algorithm, a.eval_size, a.rep) <
           std::tie(b.network, b.algorithm, b.eval_size, b.rep);
  });
}

namespace {

struct Cell {
  double n_boxes = 0.0;
  double runtime_s = 0.0;
  std::uint64_t seed = 0;
};

void check_cover(const Cover& c, const DistanceMatrix& dm) {
  const auto report = validate_cover(c, dm);
  if (!report.valid()) throw Error("invalid cover: " + report.describe());
}

std::vector<BenchRecord> run_merge(const std::string& network, const AlgorithmConfig& alg,
                                   const DistanceMatrix& dm, std::span<const int> radii,
                                   const BenchOptions& opts) {
  const int m = opts.repetitions;
  const int diameter = dm.diameter();
  const int max_level = std::max(1, std::min(2 * radii.back(), diameter));
  // Per repetition: cover counts and cumulative times per level.
  std::vector<std::vector<double>> counts(m), times(m);
  std::vector<std::uint64_t> seeds(m);
  parallel_for(m, opts.threads, [&](int rep) {
    seeds[rep] = cell_seed(opts.seed, network, alg.id, 0, rep);
    Rng rng(seeds[rep]);
    std::vector<double> at_level;
    const auto t0 = Clock::now();
    auto levels = merge_algorithm(dm, max_level, rng, [&](int) { at_level.push_back(seconds_since(t0)); });
    for (const auto& c : levels) {
      check_cover(c, dm);
      counts[rep].push_back(double(c.box_count()));
    }
    times[rep] = std::move(at_level);
  });
  std::vector<BenchRecord> out;
  for (int r : radii) {
    const int level = std::min(2 * r, max_level);
    bool all_one = true;
    for (int rep = 0; rep < m; ++rep) {
      const double n = counts[rep][level - 1];
      all_one = all_one && n == 1.0;
      out.push_back({network, alg.id, 2 * r + 1, rep, n,
                     times[rep][level - 1] + opts.apsp_seconds, seeds[rep]});
    }
    if (all_one) break;
  }
  return out;
}

}  // namespace

BenchResult run_benchmark(const std::string& network, const Graph& g, const DistanceMatrix& dm,
                          std::span<const AlgorithmConfig> algorithms, const BenchOptions& opts) {
  if (opts.repetitions < 1) throw Error("repetitions must be at least 1");
  BenchResult result;
  result.radii = opts.radii.empty() ? radius_grid(dm.diameter()) : opts.radii;
  std::sort(result.radii.begin(), result.radii.end());
  result.radii.erase(std::unique(result.radii.begin(), result.radii.end()), result.radii.end());

  struct AuxEntry {
    Graph graph;
    double seconds;
  };
  std::map<int, AuxEntry> aux_cache;
  auto aux_for = [&](int impl) -> AuxEntry& {
    auto it = aux_cache.find(impl);
    if (it == aux_cache.end()) {
      const auto t0 = Clock::now();
      Graph aux = auxiliary_graph(dm, impl);
      it = aux_cache.emplace(impl, AuxEntry{std::move(aux), seconds_since(t0)}).first;
    }
    return it->second;
  };

  const int m = opts.repetitions;
  for (const auto& alg : algorithms) {
    std::vector<BenchRecord> rows;
    try {
      if (alg.kind == AlgorithmKind::Merge) {
        rows = run_merge(network, alg, dm, result.radii, opts);
      } else {
        for (int r : result.radii) {
          const int eval = 2 * r + 1;
          const SizeSpec size = alg.radius_based() ? SizeSpec::radius(r) : SizeSpec::impl(2 * r);
          const AuxEntry* aux = alg.coloring_family() ? &aux_for(2 * r) : nullptr;
          const double extra = opts.apsp_seconds + (aux ? aux->seconds : 0.0);
          std::vector<Cell> cells(m);
          parallel_for(m, opts.threads, [&](int rep) {
            Cell& cell = cells[rep];
            cell.seed = cell_seed(opts.seed, network, alg.id, eval, rep);
            Rng rng(cell.seed);
            const auto t0 = Clock::now();
            if (alg.kind == AlgorithmKind::Fuzzy) {
              const double radius = r;
              cell.n_boxes = fuzzy(dm, std::span<const double>(&radius, 1)).front().boxes;
              cell.runtime_s = seconds_since(t0);
            } else {
              Cover c = run_cover(alg, g, dm, size, rng, aux ? &aux->graph : nullptr);
              cell.runtime_s = seconds_since(t0);
              check_cover(c, dm);
              cell.n_boxes = double(c.box_count());
            }
            cell.runtime_s += extra;
          });
          bool all_one = true;
          for (int rep = 0; rep < m; ++rep) {
            all_one = all_one && cells[rep].n_boxes == 1.0;
            rows.push_back({network, alg.id, eval, rep, cells[rep].n_boxes, cells[rep].runtime_s,
                            cells[rep].seed});
          }
          if (all_one) break;
        }
      }
    } catch (const std::exception& e) {
      result.warnings.push_back({alg.id, e.what()});
      continue;
    }
    result.records.insert(result.records.end(), rows.begin(), rows.end());
  }
  sort_records(result.records);
  return result;
}

std::map<int, Baseline> baseline(std::span<const BenchRecord> records, const std::string& greedy_id) {
  std::vector<const BenchRecord*> greedy;
  for (const auto& r : records)
    if (r.algorithm == greedy_id) greedy.push_back(&r);
  if (greedy.empty()) throw Error("no greedy records to derive a baseline from");
  std::stable_sort(greedy.begin(), greedy.end(), [](const BenchRecord* a, const BenchRecord* b) {
    return std::tie(a->network, a->eval_size, a->rep) < std::tie(b->network, b->eval_size, b->rep);
  });
  std::map<int, Baseline> out;
  for (const BenchRecord* r : greedy) {
    auto [it, fresh] = out.try_emplace(r->eval_size, Baseline{r->n_boxes, r->runtime_s});
    if (!fresh && r->n_boxes < it->second.n_boxes) it->second = {r->n_boxes, r->runtime_s};
  }
  return out;
}

double performance_score(double n_boxes, double base) { return (n_boxes - base) / base; }

const ScoreSummary* ScoreTable::summary(const std::string& algorithm) const {
  for (const auto& s : summaries)
    if (s.algorithm == algorithm) return &s;
  return nullptr;
}

ScoreTable score(std::span<const BenchRecord> records, const std::map<int, Baseline>& base,
                 std::span<const std::string> unscored) {
  std::map<std::tuple<std::string, std::string, int>, std::vector<const BenchRecord*>> groups;
  for (const auto& r : records) {
    if (std::find(unscored.begin(), unscored.end(), r.algorithm) != unscored.end()) continue;
    if (!base.contains(r.eval_size)) continue;
    groups[{r.network, r.algorithm, r.eval_size}].push_back(&r);
  }
  ScoreTable t;
  for (auto& [key, group] : groups) {
    const auto& [network, algorithm, eval] = key;
    const Baseline& b = base.at(eval);
    ScoreRow row{network, algorithm, eval};
    row.base_boxes = b.n_boxes;
    std::vector<double> boxes, norm;
    for (const BenchRecord* r : group) {
      boxes.push_back(r->n_boxes);
      row.p.push_back(performance_score(r->n_boxes, b.n_boxes));
      norm.push_back(r->runtime_s / b.runtime_s);
    }
    row.mean_boxes = mean(boxes);
    row.delta_mean = row.mean_boxes - b.n_boxes;
    row.mean_p = mean(row.p);
    row.std_p = stddev(row.p);
    row.mean_norm_runtime = mean(norm);
    row.accepted = b.n_boxes >= kAcceptanceThreshold;
    t.rows.push_back(std::move(row));
  }
  std::map<std::pair<std::string, std::string>, std::vector<const ScoreRow*>> by_alg;
  for (const auto& row : t.rows)
    if (row.accepted) by_alg[{row.network, row.algorithm}].push_back(&row);
  for (const auto& [key, rows] : by_alg) {
    ScoreSummary s{key.first, key.second, rows.size()};
    std::vector<double> pooled, stds, runtimes;
    for (const ScoreRow* row : rows) {
      pooled.insert(pooled.end(), row->p.begin(), row->p.end());
      stds.push_back(row->std_p);
      runtimes.push_back(row->mean_norm_runtime);
    }
    s.mean_p = mean(pooled);
    s.intrinsic_std = mean(stds);
    s.total_std = stddev(pooled);
    s.mean_norm_runtime = mean(runtimes);
    t.summaries.push_back(s);
  }
  return t;
}

std::map<std::string, std::vector<ScalingPoint>> scaling_series(std::span<const BenchRecord> records) {
  std::map<std::string, std::map<int, std::vector<double>>> grouped;
  for (const auto& r : records) grouped[r.algorithm][r.eval_size].push_back(r.n_boxes);
  std::map<std::string, std::vector<ScalingPoint>> out;
  for (const auto& [alg, sizes] : grouped)
    for (const auto& [eval, counts] : sizes) out[alg].push_back({double(eval), mean(counts)});
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_records_csv(std::ostream& out, std::span<const BenchRecord> records, bool header) {
  if (header) out << "network,algorithm,eval_size,rep,n_boxes,runtime_s,seed\n";
  for (const auto& r : records)
    out << r.network << ',' << r.algorithm << ',' << r.eval_size << ',' << r.rep << ','
        << format_number(r.n_boxes) << ',' << format_number(r.runtime_s) << ',' << r.seed << '\n';
}

void write_scores_csv(std::ostream& out, const ScoreTable& t, bool header) {
  if (header)
    out << "network,algorithm,eval_size,mean_n_boxes,base_n_boxes,delta_mean,mean_p,std_p,"
           "mean_norm_runtime,accepted\n";
  for (const auto& r : t.rows)
    out << r.network << ',' << r.algorithm << ',' << r.eval_size << ',' << format_number(r.mean_boxes)
        << ',' << format_number(r.base_boxes) << ',' << format_number(r.delta_mean) << ','
        << format_number(r.mean_p) << ',' << format_number(r.std_p) << ','
        << format_number(r.mean_norm_runtime) << ',' << (r.accepted ? 1 : 0) << '\n';
}

void write_summary_csv(std::ostream& out, const ScoreTable& t, bool header) {
  if (header)
    out << "network,algorithm,accepted_sizes,mean_p,intrinsic_std,total_std,mean_norm_runtime\n";
  for (const auto& s : t.summaries)
    out << s.network << ',' << s.algorithm << ',' << s.accepted_sizes << ','
        << format_number(s.mean_p) << ',' << format_number(s.intrinsic_std) << ','
        << format_number(s.total_std) << ',' << format_number(s.mean_norm_runtime) << '\n';
}

}  // namespace boxcover
