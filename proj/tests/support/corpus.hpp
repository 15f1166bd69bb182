#ifndef BOXCOVER_TESTS_CORPUS_HPP
#define BOXCOVER_TESTS_CORPUS_HPP

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

#include "boxcover/graph.hpp"

namespace testsupport {

using boxcover::Graph;
using boxcover::Node;
using boxcover::Rng;

// Random connected graph: a random recursive tree plus each remaining pair
// with probability `density`.
inline Graph random_connected_graph(Rng& rng, std::size_t n, double density) {
  std::vector<std::pair<Node, Node>> edges;
  for (Node v = 1; v < n; ++v) edges.emplace_back(static_cast<Node>(rng.index(v)), v);
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v)
      if (rng.uniform() < density) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Graphs with 2..max_n nodes and densities cycling through sparse to dense.
inline std::vector<Graph> corpus(std::size_t count, std::size_t max_n = 8, std::uint64_t seed = 2024) {
  Rng rng(seed);
  const double densities[] = {0.0, 0.1, 0.25, 0.5};
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + rng.index(max_n - 1);
    out.push_back(random_connected_graph(rng, n, densities[i % 4]));
  }
  return out;
}

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.size();
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (Node u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Node v : g.neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Minimum partition into groups of pairwise distance <= limit, by enumerating
// every set partition (restricted growth strings). Fine up to n = 9.
inline std::size_t brute_force_min_cover(const std::vector<std::vector<int>>& d, int limit) {
  const std::size_t n = d.size();
  std::vector<int> group(n, 0);
  std::size_t best = n;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (std::size_t(used) >= best) return;
    if (i == n) {
      best = std::size_t(used);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (group[j] == b && d[i][j] > limit) ok = false;
      if (!ok) continue;
      group[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace testsupport

#endif
