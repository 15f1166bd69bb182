#ifndef BOXCOVER_CONFIG_HPP
#define BOXCOVER_CONFIG_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boxcover/boxing.hpp"
#include "boxcover/metaheuristics.hpp"
#include "boxcover/overlap_sampling.hpp"

namespace boxcover {

class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class AlgorithmKind {
  Greedy,
  RandomSequential,
  Cbb,
  Memb,
  Remcc,
  Mcwr,
  Merge,
  SimulatedAnnealing,
  DifferentialEvolution,
  ParticleSwarm,
  Obca,
  Fuzzy,
  Sampling,
};

enum class SamplingInner { RandomSequential, MaximalBox };

/// One configured algorithm instance. Defaults reproduce the reference
/// hyperparameter table for the built-in ids.
struct AlgorithmConfig {
  std::string id;
  AlgorithmKind kind = AlgorithmKind::Greedy;
  double mix = 0.5;  // mcwr
  SAParams sa;
  DEParams de;
  PSOParams pso;
  SamplingInner inner = SamplingInner::MaximalBox;
  int samples = 10;
  SelectionStrategy strategy = SelectionStrategy::SmallBoxRemoval;

  /// Radius-based algorithms take r_B; the rest take l̃.
  bool radius_based() const;
  /// Builds actual boxes (false only for the fuzzy estimator).
  bool produces_cover() const;
  /// Runs on the auxiliary graph.
  bool coloring_family() const;
};

/// Built-in ids: cbb d30 d70 fuz gre mc.25 mc.5 mc.75 memb mer obca ps.2k ps1k
/// remcc rs sa sm10 sm40 sr10 sr40.
const std::vector<std::string>& builtin_algorithm_ids();
AlgorithmConfig builtin_algorithm(const std::string& id);

/// Applies `key = value` overrides (hyperparameter names per kind).
void apply_parameter(AlgorithmConfig& alg, const std::string& key, const std::string& value);

struct RunConfig {
  std::vector<std::string> networks;  // edge-list paths or gen:<spec>
  std::vector<AlgorithmConfig> algorithms;
  int repetitions = 15;
  std::uint64_t seed = 1;
  std::vector<int> radii;  // empty: derived from the diameter
  std::string output_dir = "bench_out";
  int threads = 1;
};

/// INI-style text: a [run] section plus one [alg.<id>] section per algorithm.
/// `#` and `;` start comment lines.
RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::string& path);

}  // namespace boxcover

#endif
