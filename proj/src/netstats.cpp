#include "boxcover/netstats.hpp"

#include <algorithm>
#include <cstdint>

namespace boxcover {

double gini(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw Error("gini of an empty graph");
  std::vector<std::int64_t> k(n);
  for (Node v = 0; v < n; ++v) k[v] = static_cast<std::int64_t>(g.degree(v));
  std::sort(k.begin(), k.end());
  // integer numerator keeps regular graphs at exactly zero
  std::int64_t weighted = 0, total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    weighted += static_cast<std::int64_t>(n - i) * k[i];
    total += k[i];
  }
  if (total == 0) return 0.0;
  const auto nn = static_cast<std::int64_t>(n);
  return static_cast<double>((nn + 1) * total - 2 * weighted) / static_cast<double>(nn * total);
}

double local_clustering(const Graph& g, Node v) {
  auto adj = g.neighbors(v);
  const std::size_t k = adj.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.has_edge(adj[i], adj[j])) ++links;
  return 2.0 * static_cast<double>(links) / static_cast<double>(k * (k - 1));
}

double average_clustering(const Graph& g) {
  if (g.size() == 0) return 0.0;
  double sum = 0.0;
  for (Node v = 0; v < g.size(); ++v) sum += local_clustering(g, v);
  return sum / static_cast<double>(g.size());
}

StatsReport basic_stats(const Graph& g, const DistanceMatrix& dm) {
  StatsReport r;
  r.n = g.size();
  r.e = g.edge_count();
  r.diameter = dm.diameter();
  r.gini = gini(g);
  r.clustering = average_clustering(g);
  return r;
}

}  // namespace boxcover
