#ifndef BOXCOVER_BENCHMARK_HPP
#define BOXCOVER_BENCHMARK_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "boxcover/config.hpp"
#include "boxcover/dimension.hpp"
#include "boxcover/graph.hpp"

namespace boxcover {

/// Runs one algorithm at one size. `size` must be in the algorithm's own
/// convention (radius or l̃); otherwise a usage error is thrown. `aux` may be
/// null, in which case the auxiliary graph is built on demand.
Cover run_cover(const AlgorithmConfig& alg, const Graph& g, const DistanceMatrix& dm,
                SizeSpec size, Rng& rng, const Graph* aux = nullptr);

/// Converts a user-supplied size to the convention `alg` computes with.
/// Radius sizes are never converted to diameters and vice versa.
SizeSpec native_size(const AlgorithmConfig& alg, SizeSpec size);

struct BenchRecord {
  std::string network;
  std::string algorithm;
  int eval_size = 0;
  int rep = 0;
  double n_boxes = 0.0;
  double runtime_s = 0.0;
  std::uint64_t seed = 0;
};

/// Radius grid 1..diameter, thinned to at most `max_points` evenly spaced values.
std::vector<int> radius_grid(int diameter, std::size_t max_points = 15);

std::uint64_t cell_seed(std::uint64_t master, const std::string& network,
                        const std::string& algorithm, int eval_size, int rep);

struct BenchOptions {
  int repetitions = 15;
  std::uint64_t seed = 1;
  std::vector<int> radii;  // empty: radius_grid(diameter)
  int threads = 1;
  double apsp_seconds = 0.0;  // added to every record
};

struct BenchWarning {
  std::string algorithm;
  std::string message;
};

struct BenchResult {
  std::vector<BenchRecord> records;  // canonical order
  std::vector<BenchWarning> warnings;
  std::vector<int> radii;
};

BenchResult run_benchmark(const std::string& network, const Graph& g, const DistanceMatrix& dm,
                          std::span<const AlgorithmConfig> algorithms, const BenchOptions& opts);

void sort_records(std::vector<BenchRecord>& records);

struct Baseline {
  double n_boxes = 0.0;
  double runtime_s = 0.0;
};

/// Per eval size: best greedy count and the runtime of the first run achieving it.
std::map<int, Baseline> baseline(std::span<const BenchRecord> records,
                                 const std::string& greedy_id = "gre");

double performance_score(double n_boxes, double base);

struct ScoreRow {
  std::string network;
  std::string algorithm;
  int eval_size = 0;
  double mean_boxes = 0.0;
  double base_boxes = 0.0;
  double delta_mean = 0.0;
  std::vector<double> p;
  double mean_p = 0.0;
  double std_p = 0.0;
  double mean_norm_runtime = 0.0;
  bool accepted = false;
};

struct ScoreSummary {
  std::string network;
  std::string algorithm;
  std::size_t accepted_sizes = 0;
  double mean_p = 0.0;
  double intrinsic_std = 0.0;
  double total_std = 0.0;
  double mean_norm_runtime = 0.0;
};

struct ScoreTable {
  std::vector<ScoreRow> rows;
  std::vector<ScoreSummary> summaries;  // acceptance region only

  const ScoreSummary* summary(const std::string& algorithm) const;
};

inline constexpr double kAcceptanceThreshold = 10.0;

/// Scores every algorithm except those listed in `unscored`. Sizes without a
/// baseline are omitted.
ScoreTable score(std::span<const BenchRecord> records, const std::map<int, Baseline>& base,
                 std::span<const std::string> unscored = {});

/// Mean N_B against eval size, one series per algorithm.
std::map<std::string, std::vector<ScalingPoint>> scaling_series(
    std::span<const BenchRecord> records);

void write_records_csv(std::ostream& out, std::span<const BenchRecord> records, bool header = true);
void write_scores_csv(std::ostream& out, const ScoreTable& t, bool header = true);
void write_summary_csv(std::ostream& out, const ScoreTable& t, bool header = true);

std::string format_number(double v);

}  // namespace boxcover

#endif
