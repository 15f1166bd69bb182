#ifndef BOXCOVER_METAHEURISTICS_HPP
#define BOXCOVER_METAHEURISTICS_HPP

#include <Eigen/Dense>

#include "boxcover/boxing.hpp"

namespace boxcover {

struct SAParams {
  int k1 = 5000;  // target moves per iteration
  int k2 = 5;     // target splits per iteration
  int k3 = 20;    // iterations
  double t0 = 0.6;
  double cooling = 0.995;

  void validate() const;
};

struct DEParams {
  int population = 40;
  double weight = 0.9;
  double crossover = 0.85;
  int generations = 30;

  void validate() const;
};

struct PSOParams {
  int generations = 200;
  int particles = 99;
  double c1 = 1.494;
  double c2 = 1.494;

  void validate() const;
};

/// Probability of accepting a state whose energy is `delta` higher at
/// temperature `t`; 1 for delta <= 0.
double sa_acceptance_probability(double delta, double t);

struct SAResult {
  Cover cover;
  double final_temperature = 0.0;
  std::vector<std::size_t> energy;  // accepted energy after each iteration
};

/// Simulated annealing over partitions, seeded with the merge algorithm.
/// Each iteration: node moves into neighbouring boxes, singleton splits, a
/// merge pass, then the Metropolis acceptance test on the box count.
SAResult simulated_annealing(const Graph& g, const DistanceMatrix& dm, int impl_size,
                             const SAParams& params, Rng& rng);

/// Node order encoded by a real vector: ascending value, ties by node id.
std::vector<Node> decode_order(const Eigen::Ref<const Eigen::VectorXd>& keys);

struct EvolutionResult {
  Cover cover;
  std::vector<std::size_t> best_per_generation;  // index 0 = initial population
};

/// Differential evolution over greedy-colouring orders of the auxiliary graph.
EvolutionResult differential_evolution(const Graph& aux, int impl_size, const DEParams& params,
                                       Rng& rng);

/// x ⊕ y: 1 if the box ids differ.
constexpr int box_xor(Node x, Node y) { return x != y ? 1 : 0; }

/// Stochastic sigmoid: 1 with probability 1 / (1 + e^-z).
int stochastic_sigmoid(double z, Rng& rng);

/// Draws candidate boxes from `candidates` without replacement and returns the
/// first (other than `current`) whose every member is within l̃ of `node`;
/// `current` if none fits. `members[b]` lists the nodes of box b.
Node nbest(Node node, Node current, NodeSet candidates, const std::vector<NodeSet>& members,
           const DistanceMatrix& dm, int impl_size, Rng& rng);

/// Discrete particle swarm over box assignments, particles seeded by random
/// greedy colourings.
EvolutionResult pso(const Graph& g, const DistanceMatrix& dm, const Graph& aux, int impl_size,
                    const PSOParams& params, Rng& rng);

}  // namespace boxcover

#endif
