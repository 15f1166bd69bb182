#include "boxcover/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace boxcover {

bool AlgorithmConfig::radius_based() const {
  switch (kind) {
    case AlgorithmKind::RandomSequential:
    case AlgorithmKind::Memb:
    case AlgorithmKind::Remcc:
    case AlgorithmKind::Mcwr:
    case AlgorithmKind::Fuzzy:
      return true;
    case AlgorithmKind::Sampling:
      return inner == SamplingInner::RandomSequential;
    default:
      return false;
  }
}

bool AlgorithmConfig::produces_cover() const { return kind != AlgorithmKind::Fuzzy; }

bool AlgorithmConfig::coloring_family() const {
  return kind == AlgorithmKind::Greedy || kind == AlgorithmKind::DifferentialEvolution ||
         kind == AlgorithmKind::ParticleSwarm;
}

const std::vector<std::string>& builtin_algorithm_ids() {
  static const std::vector<std::string> ids = {
      "cbb",  "d30",  "d70",   "fuz", "gre",   "mc.25", "mc.5", "mc.75", "memb", "mer",
      "obca", "ps.2k", "ps1k", "remcc", "rs",  "sa",    "sm10", "sm40",  "sr10", "sr40"};
  return ids;
}

AlgorithmConfig builtin_algorithm(const std::string& id) {
  AlgorithmConfig a;
  a.id = id;
  auto sampling = [&](SamplingInner inner, int n) {
    a.kind = AlgorithmKind::Sampling;
    a.inner = inner;
    a.samples = n;
    a.strategy = SelectionStrategy::SmallBoxRemoval;
  };
  if (id == "cbb") a.kind = AlgorithmKind::Cbb;
  else if (id == "d30" || id == "d70") {
    a.kind = AlgorithmKind::DifferentialEvolution;
    a.de = {40, 0.9, 0.85, id == "d30" ? 30 : 70};
  } else if (id == "fuz") a.kind = AlgorithmKind::Fuzzy;
  else if (id == "gre") a.kind = AlgorithmKind::Greedy;
  else if (id == "mc.25" || id == "mc.5" || id == "mc.75") {
    a.kind = AlgorithmKind::Mcwr;
    a.mix = id == "mc.25" ? 0.25 : id == "mc.5" ? 0.5 : 0.75;
  } else if (id == "memb") a.kind = AlgorithmKind::Memb;
  else if (id == "mer") a.kind = AlgorithmKind::Merge;
  else if (id == "obca") a.kind = AlgorithmKind::Obca;
  else if (id == "ps.2k" || id == "ps1k") {
    a.kind = AlgorithmKind::ParticleSwarm;
    a.pso = {id == "ps.2k" ? 200 : 1000, 99, 1.494, 1.494};
  } else if (id == "remcc") a.kind = AlgorithmKind::Remcc;
  else if (id == "rs") a.kind = AlgorithmKind::RandomSequential;
  else if (id == "sa") {
    a.kind = AlgorithmKind::SimulatedAnnealing;
    a.sa = {5000, 5, 20, 0.6, 0.995};
  } else if (id == "sm10") sampling(SamplingInner::MaximalBox, 10);
  else if (id == "sm40") sampling(SamplingInner::MaximalBox, 40);
  else if (id == "sr10") sampling(SamplingInner::RandomSequential, 10);
  else if (id == "sr40") sampling(SamplingInner::RandomSequential, 40);
  else throw ConfigError("unknown algorithm id '" + id + "'");
  return a;
}

namespace {

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("parameter '" + key + "': '" + v + "' is not a number");
  }
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError("parameter '" + key + "': '" + v + "' is not an integer");
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

namespace {

void apply_parameter_unchecked(AlgorithmConfig& a, const std::string& key, const std::string& value) {
  auto bad = [&] { return ConfigError("algorithm '" + a.id + "' has no parameter '" + key + "'"); };
  switch (a.kind) {
    case AlgorithmKind::Mcwr:
      if (key != "p") throw bad();
      a.mix = to_double(key, value);
      if (a.mix < 0.0 || a.mix > 1.0) throw ConfigError("mcwr p must lie in [0, 1]");
      return;
    case AlgorithmKind::SimulatedAnnealing:
      if (key == "k1") a.sa.k1 = to_int(key, value);
      else if (key == "k2") a.sa.k2 = to_int(key, value);
      else if (key == "k3") a.sa.k3 = to_int(key, value);
      else if (key == "T0" || key == "t0") a.sa.t0 = to_double(key, value);
      else if (key == "c") a.sa.cooling = to_double(key, value);
      else throw bad();
      a.sa.validate();
      return;
    case AlgorithmKind::DifferentialEvolution:
      if (key == "p") a.de.population = to_int(key, value);
      else if (key == "f") a.de.weight = to_double(key, value);
      else if (key == "c") a.de.crossover = to_double(key, value);
      else if (key == "g") a.de.generations = to_int(key, value);
      else throw bad();
      a.de.validate();
      return;
    case AlgorithmKind::ParticleSwarm:
      if (key == "g") a.pso.generations = to_int(key, value);
      else if (key == "p") a.pso.particles = to_int(key, value);
      else if (key == "c1") a.pso.c1 = to_double(key, value);
      else if (key == "c2") a.pso.c2 = to_double(key, value);
      else throw bad();
      a.pso.validate();
      return;
    case AlgorithmKind::Sampling:
      if (key == "n") {
        a.samples = to_int(key, value);
        if (a.samples < 1) throw ConfigError("sampling n must be positive");
      } else if (key == "inner") {
        if (value == "random_sequential" || value == "rs") a.inner = SamplingInner::RandomSequential;
        else if (value == "maximal" || value == "maximal_box") a.inner = SamplingInner::MaximalBox;
        else throw ConfigError("unknown sampling inner algorithm '" + value + "'");
      } else if (key == "strategy") {
        if (value == "small_first" || value == "small_box_removal") a.strategy = SelectionStrategy::SmallBoxRemoval;
        else if (value == "big_first" || value == "big_box_first") a.strategy = SelectionStrategy::BigBoxFirst;
        else throw ConfigError("unknown selection strategy '" + value + "'");
      } else {
        throw bad();
      }
      return;
    default:
      throw bad();
  }
}

}  // namespace

void apply_parameter(AlgorithmConfig& a, const std::string& key, const std::string& value) {
  try {
    apply_parameter_unchecked(a, key, value);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("algorithm '" + a.id + "': " + e.what());
  }
}

namespace {

using Entries = std::vector<std::pair<std::string, std::string>>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Sections in file order; empty sections are kept.
std::vector<std::pair<std::string, Entries>> read_sections(std::istream& in) {
  std::vector<std::pair<std::string, Entries>> sections;
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const std::string where = "config line " + std::to_string(lineno) + ": ";
    if (line[0] == '[') {
      if (line.back() != ']') throw ConfigError(where + "unterminated section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      for (const auto& sec : sections)
        if (sec.first == name) throw ConfigError(where + "duplicate section [" + name + "]");
      sections.emplace_back(name, Entries{});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    if (sections.empty()) throw ConfigError(where + "key outside of any section");
    const std::string key = trim(line.substr(0, eq));
    for (const auto& [k, v] : sections.back().second)
      if (k == key) throw ConfigError(where + "duplicate key '" + key + "'");
    sections.back().second.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return sections;
}

}  // namespace

RunConfig parse_run_config(std::istream& in) {
  const auto sections = read_sections(in);
  RunConfig cfg;
  bool saw_run = false;
  for (const auto& [section, body] : sections) {
    if (section == "run") {
      saw_run = true;
      for (const auto& [key, value] : body) {
        if (key == "networks") cfg.networks = split_list(value);
        else if (key == "repetitions") cfg.repetitions = to_int(key, value);
        else if (key == "seed") {
          try {
            cfg.seed = std::stoull(value);
          } catch (const std::exception&) {
            throw ConfigError("seed must be an unsigned integer");
          }
        } else if (key == "radii") {
          for (const auto& tok : split_list(value)) cfg.radii.push_back(to_int(key, tok));
        } else if (key == "output") cfg.output_dir = value;
        else if (key == "threads") cfg.threads = to_int(key, value);
        else throw ConfigError("unknown [run] key '" + key + "'");
      }
    } else if (section.rfind("alg.", 0) == 0) {
      const std::string name = section.substr(4);
      std::string base = name;
      for (const auto& [key, value] : body)
        if (key == "type") base = value;
      auto alg = builtin_algorithm(base);
      alg.id = name;
      for (const auto& [key, value] : body)
        if (key != "type") apply_parameter(alg, key, value);
      cfg.algorithms.push_back(std::move(alg));
    } else {
      throw ConfigError("unknown config section '" + section + "'");
    }
  }
  if (!saw_run) throw ConfigError("config lacks a [run] section");
  if (cfg.networks.empty()) throw ConfigError("no networks configured");
  if (cfg.algorithms.empty()) throw ConfigError("no algorithms configured");
  if (cfg.repetitions < 1) throw ConfigError("repetitions must be at least 1");
  if (cfg.threads < 1) throw ConfigError("threads must be at least 1");
  for (int r : cfg.radii)
    if (r < 1) throw ConfigError("radii must be positive");
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  return parse_run_config(in);
}

}  // namespace boxcover
