#include <doctest.h>

#include <sstream>

#include "boxcover/config.hpp"

using namespace boxcover;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_run_config(in);
}

}  // namespace

TEST_CASE("built-in defaults") {
  CHECK(builtin_algorithm_ids().size() == 20);
  for (const auto& id : builtin_algorithm_ids()) CHECK(builtin_algorithm(id).id == id);

  auto sa = builtin_algorithm("sa");
  CHECK(sa.sa.k1 == 5000);
  CHECK(sa.sa.k2 == 5);
  CHECK(sa.sa.k3 == 20);
  CHECK(sa.sa.t0 == 0.6);
  CHECK(sa.sa.cooling == 0.995);

  auto d30 = builtin_algorithm("d30");
  CHECK(d30.de.population == 40);
  CHECK(d30.de.weight == 0.9);
  CHECK(d30.de.crossover == 0.85);
  CHECK(d30.de.generations == 30);
  CHECK(builtin_algorithm("d70").de.generations == 70);

  auto ps = builtin_algorithm("ps.2k");
  CHECK(ps.pso.generations == 200);
  CHECK(ps.pso.particles == 99);
  CHECK(ps.pso.c1 == 1.494);
  CHECK(ps.pso.c2 == 1.494);
  CHECK(builtin_algorithm("ps1k").pso.generations == 1000);

  CHECK(builtin_algorithm("mc.25").mix == 0.25);
  CHECK(builtin_algorithm("mc.5").mix == 0.5);
  CHECK(builtin_algorithm("mc.75").mix == 0.75);
  CHECK(builtin_algorithm("sm40").samples == 40);
  CHECK(builtin_algorithm("sr10").inner == SamplingInner::RandomSequential);
  CHECK(builtin_algorithm("sm10").strategy == SelectionStrategy::SmallBoxRemoval);

  for (const char* id : {"rs", "memb", "remcc", "mc.5", "sr10", "fuz"}) CHECK(builtin_algorithm(id).radius_based());
  for (const char* id : {"gre", "cbb", "mer", "sa", "d30", "ps.2k", "obca", "sm10"})
    CHECK_FALSE(builtin_algorithm(id).radius_based());
  CHECK_THROWS_AS(builtin_algorithm("foo"), ConfigError);
}

TEST_CASE("run config parsing") {
  auto cfg = parse(R"(
[run]
networks = a.edges, gen:grid:5x5
repetitions = 3
seed = 99
radii = 1 2 4
output = out
threads = 2

[alg.gre]
[alg.sa]
k1 = 100
T0 = 0.5
[alg.fast_de]
type = d30
g = 2
)");
  CHECK(cfg.networks == std::vector<std::string>{"a.edges", "gen:grid:5x5"});
  CHECK(cfg.repetitions == 3);
  CHECK(cfg.seed == 99);
  CHECK(cfg.radii == std::vector<int>{1, 2, 4});
  CHECK(cfg.output_dir == "out");
  CHECK(cfg.threads == 2);
  REQUIRE(cfg.algorithms.size() == 3);
  CHECK(cfg.algorithms[1].sa.k1 == 100);
  CHECK(cfg.algorithms[1].sa.t0 == 0.5);
  CHECK(cfg.algorithms[1].sa.k3 == 20);
  CHECK(cfg.algorithms[2].id == "fast_de");
  CHECK(cfg.algorithms[2].de.generations == 2);

  auto defaults = parse("[run]\nnetworks = x\n[alg.rs]\n");
  CHECK(defaults.repetitions == 15);
}

TEST_CASE("run config errors") {
  CHECK_THROWS_AS(parse("[run]\nnetworks = x\n[alg.foo]\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nnetworks = x\n[alg.sa]\nk9 = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nnetworks = x\n[alg.sa]\nc = 1.5\n"), Error);
  CHECK_THROWS_AS(parse("[run]\nnetworks = x\nrepetitions = 0\n[alg.rs]\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nnetworks = x\nrepetitions = many\n[alg.rs]\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\n[alg.rs]\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nnetworks = x\n"), ConfigError);
  CHECK_THROWS_AS(parse("[alg.rs]\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nnetworks = x\nspeed = 3\n[alg.rs]\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nnetworks = x\n[alg.rs]\n[extra]\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run\nnetworks = x\n"), ConfigError);
}
