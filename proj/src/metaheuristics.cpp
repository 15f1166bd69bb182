#include "boxcover/metaheuristics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "boxcover/burners.hpp"

namespace boxcover {

void SAParams::validate() const {
  if (k1 < 0 || k2 < 0 || k3 < 0) throw Error("sa: k1, k2, k3 must be non-negative");
  if (!(t0 > 0.0)) throw Error("sa: T0 must be positive");
  if (!(cooling > 0.0 && cooling < 1.0)) throw Error("sa: cooling constant must lie in (0, 1)");
}

void DEParams::validate() const {
  if (population < 4) throw Error("de: population must be at least 4");
  if (!(crossover > 0.0 && crossover <= 1.0)) throw Error("de: crossover rate must lie in (0, 1]");
  if (generations < 0) throw Error("de: generations must be non-negative");
}

void PSOParams::validate() const {
  if (particles < 1) throw Error("pso: need at least one particle");
  if (c1 < 0.0 || c2 < 0.0) throw Error("pso: acceleration coefficients must be non-negative");
  if (generations < 0) throw Error("pso: generations must be non-negative");
}

double sa_acceptance_probability(double delta, double t) {
  if (delta <= 0.0) return 1.0;
  return std::exp(-delta / t);
}

namespace {

struct Partition {
  std::vector<NodeSet> boxes;
  std::vector<std::size_t> box_of;

  explicit Partition(std::vector<NodeSet> b, std::size_t n) : boxes(std::move(b)), box_of(n) {
    reindex();
  }
  void reindex() {
    for (std::size_t i = 0; i < boxes.size(); ++i)
      for (Node v : boxes[i]) box_of[v] = i;
  }
  void move(Node v, std::size_t to) {
    auto& from = boxes[box_of[v]];
    from.erase(std::find(from.begin(), from.end(), v));
    boxes[to].push_back(v);
    box_of[v] = to;
  }
};

bool fits(const DistanceMatrix& dm, Node v, const NodeSet& box, int limit) {
  return std::all_of(box.begin(), box.end(), [&](Node m) { return dm(v, m) <= limit; });
}

// One move trial: pick a box and pull in a random admissible outside neighbour.
bool try_move(const Graph& g, const DistanceMatrix& dm, int limit, Partition& s, Rng& rng) {
  const std::size_t b = rng.index(s.boxes.size());
  NodeSet candidates;
  for (Node m : s.boxes[b])
    for (Node w : g.neighbors(m)) {
      const auto home = s.box_of[w];
      if (home == b || s.boxes[home].size() < 2) continue;
      if (fits(dm, w, s.boxes[b], limit)) candidates.push_back(w);
    }
  if (candidates.empty()) return false;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  s.move(rng.pick(candidates), b);
  return true;
}

bool try_split(Partition& s, Rng& rng) {
  const std::size_t b = rng.index(s.boxes.size());
  auto& box = s.boxes[b];
  if (box.size() < 2) return false;
  const std::size_t i = rng.index(box.size());
  const Node v = box[i];
  box.erase(box.begin() + static_cast<std::ptrdiff_t>(i));
  s.boxes.push_back({v});
  s.box_of[v] = s.boxes.size() - 1;
  return true;
}

Cover to_cover(std::vector<NodeSet> boxes, int impl_size) {
  for (auto& b : boxes) std::sort(b.begin(), b.end());
  Cover c;
  c.boxes = std::move(boxes);
  c.produced_for = SizeSpec::impl(impl_size);
  return c;
}

}  // namespace

SAResult simulated_annealing(const Graph& g, const DistanceMatrix& dm, int impl_size,
                             const SAParams& params, Rng& rng) {
  params.validate();
  const std::size_t n = dm.size();
  auto initial = merge_algorithm(dm, impl_size, rng).back();
  Partition state(std::move(initial.boxes), n);
  double t = params.t0;
  SAResult result;
  for (int it = 0; it < params.k3; ++it) {
    Partition next = state;
    for (int trial = 0, moved = 0; trial < 2 * params.k1 && moved < params.k1; ++trial)
      if (try_move(g, dm, impl_size, next, rng)) ++moved;
    for (int trial = 0, split = 0; trial < 2 * params.k2 && split < params.k2; ++trial)
      if (try_split(next, rng)) ++split;
    merge_sweeps(dm, next.boxes, impl_size, rng);
    next.reindex();

    const double delta = static_cast<double>(next.boxes.size()) - static_cast<double>(state.boxes.size());
    if (delta <= 0.0 || rng.uniform() < sa_acceptance_probability(delta, t)) state = std::move(next);
    t *= params.cooling;
    result.energy.push_back(state.boxes.size());
  }
  result.final_temperature = t;
  result.cover = to_cover(std::move(state.boxes), impl_size);
  return result;
}

std::vector<Node> decode_order(const Eigen::Ref<const Eigen::VectorXd>& keys) {
  std::vector<Node> order(static_cast<std::size_t>(keys.size()));
  std::iota(order.begin(), order.end(), Node{0});
  std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) { return keys(a) < keys(b); });
  return order;
}

namespace {

// Folds x into [0, 1) by reflecting at the interval ends.
double reflect_unit(double x) {
  double t = std::fmod(std::abs(x), 2.0);
  if (t >= 1.0) t = 2.0 - t;
  return std::min(t, std::nextafter(1.0, 0.0));
}

}  // namespace

EvolutionResult differential_evolution(const Graph& aux, int impl_size, const DEParams& params,
                                       Rng& rng) {
  params.validate();
  const auto n = static_cast<Eigen::Index>(aux.size());
  const auto p = static_cast<Eigen::Index>(params.population);

  Eigen::MatrixXd x(n, p);
  for (Eigen::Index j = 0; j < p; ++j)
    for (Eigen::Index m = 0; m < n; ++m) x(m, j) = rng.uniform();

  std::vector<Node> best_colors;
  std::size_t best_count = static_cast<std::size_t>(-1);
  auto evaluate = [&](const Eigen::Ref<const Eigen::VectorXd>& keys) {
    auto colors = greedy_color(aux, decode_order(keys));
    const auto count = color_count(colors);
    if (count < best_count) {
      best_count = count;
      best_colors = std::move(colors);
    }
    return count;
  };

  std::vector<std::size_t> fitness(static_cast<std::size_t>(p));
  for (Eigen::Index j = 0; j < p; ++j) fitness[j] = evaluate(x.col(j));

  EvolutionResult result;
  result.best_per_generation.push_back(best_count);
  Eigen::MatrixXd mutant(n, p), trial(n, p);
  for (int gen = 0; gen < params.generations; ++gen) {
    for (Eigen::Index j = 0; j < p; ++j) {
      Eigen::Index r[3];
      for (int k = 0; k < 3; ++k) {
        do {
          r[k] = static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(p)));
        } while (r[k] == j || std::find(r, r + k, r[k]) != r + k);
      }
      mutant.col(j) = (x.col(r[0]) + params.weight * (x.col(r[1]) - x.col(r[2])))
                          .unaryExpr([](double v) { return reflect_unit(v); });
    }
    for (Eigen::Index j = 0; j < p; ++j) {
      const auto forced = static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(n)));
      for (Eigen::Index m = 0; m < n; ++m)
        trial(m, j) = (rng.uniform() < params.crossover || m == forced) ? mutant(m, j) : x(m, j);
    }
    for (Eigen::Index j = 0; j < p; ++j) {
      const auto count = evaluate(trial.col(j));
      if (count < fitness[j]) {
        x.col(j) = trial.col(j);
        fitness[j] = count;
      }
    }
    result.best_per_generation.push_back(best_count);
  }
  result.cover = to_cover(color_classes(best_colors), impl_size);
  return result;
}

int stochastic_sigmoid(double z, Rng& rng) {
  return rng.uniform() < 1.0 / (1.0 + std::exp(-z)) ? 1 : 0;
}

Node nbest(Node node, Node current, NodeSet candidates, const std::vector<NodeSet>& members,
           const DistanceMatrix& dm, int impl_size, Rng& rng) {
  while (!candidates.empty()) {
    const std::size_t i = rng.index(candidates.size());
    const Node box = candidates[i];
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(i));
    if (box == current) continue;
    if (fits(dm, node, members[box], impl_size)) return box;
  }
  return current;
}

namespace {

struct Particle {
  std::vector<Node> position;
  std::vector<std::uint8_t> velocity;
  std::vector<NodeSet> members;  // indexed by box id
  std::size_t boxes = 0;

  Particle(std::vector<Node> pos, std::size_t n)
      : position(std::move(pos)), velocity(n, 0), members(n) {
    for (Node v = 0; v < n; ++v) members[position[v]].push_back(v);
    recount();
  }
  void recount() {
    boxes = static_cast<std::size_t>(
        std::count_if(members.begin(), members.end(), [](const NodeSet& m) { return !m.empty(); }));
  }
  void relocate(Node v, Node to) {
    auto& from = members[position[v]];
    from.erase(std::find(from.begin(), from.end(), v));
    members[to].push_back(v);
    position[v] = to;
  }
};

}  // namespace

EvolutionResult pso(const Graph& g, const DistanceMatrix& dm, const Graph& aux, int impl_size,
                    const PSOParams& params, Rng& rng) {
  params.validate();
  const std::size_t n = dm.size();
  std::vector<Particle> swarm;
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), Node{0});
  for (int j = 0; j < params.particles; ++j) {
    rng.shuffle(order);
    swarm.emplace_back(greedy_color(aux, order), n);
  }
  std::vector<std::vector<Node>> pbest;
  std::vector<std::size_t> pbest_count;
  std::size_t g_index = 0;
  for (std::size_t j = 0; j < swarm.size(); ++j) {
    pbest.push_back(swarm[j].position);
    pbest_count.push_back(swarm[j].boxes);
    if (swarm[j].boxes < swarm[g_index].boxes) g_index = j;
  }
  std::vector<Node> gbest = swarm[g_index].position;
  std::size_t gbest_count = swarm[g_index].boxes;

  EvolutionResult result;
  result.best_per_generation.push_back(gbest_count);
  NodeSet neighbour_boxes;
  for (int gen = 0; gen < params.generations; ++gen) {
    for (std::size_t j = 0; j < swarm.size(); ++j) {
      auto& particle = swarm[j];
      for (Node k = 0; k < n; ++k) {
        const Node x = particle.position[k];
        const double z = rng.uniform() * particle.velocity[k] +
                         rng.uniform() * params.c1 * box_xor(pbest[j][k], x) +
                         rng.uniform() * params.c2 * box_xor(gbest[k], x);
        particle.velocity[k] = static_cast<std::uint8_t>(stochastic_sigmoid(z, rng));
        if (!particle.velocity[k]) continue;
        neighbour_boxes.clear();
        for (Node w : g.neighbors(k)) neighbour_boxes.push_back(particle.position[w]);
        std::sort(neighbour_boxes.begin(), neighbour_boxes.end());
        neighbour_boxes.erase(std::unique(neighbour_boxes.begin(), neighbour_boxes.end()),
                              neighbour_boxes.end());
        const Node to = nbest(k, x, neighbour_boxes, particle.members, dm, impl_size, rng);
        if (to != x) particle.relocate(k, to);
      }
      particle.recount();
      if (particle.boxes < pbest_count[j]) {
        pbest[j] = particle.position;
        pbest_count[j] = particle.boxes;
        if (particle.boxes < gbest_count) {
          gbest = particle.position;
          gbest_count = particle.boxes;
        }
      }
    }
    result.best_per_generation.push_back(gbest_count);
  }

  std::vector<NodeSet> boxes(n);
  for (Node v = 0; v < n; ++v) boxes[gbest[v]].push_back(v);
  boxes.erase(std::remove_if(boxes.begin(), boxes.end(), [](const NodeSet& b) { return b.empty(); }),
              boxes.end());
  result.cover = to_cover(std::move(boxes), impl_size);
  return result;
}

}  // namespace boxcover
