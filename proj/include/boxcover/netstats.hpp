#ifndef BOXCOVER_NETSTATS_HPP
#define BOXCOVER_NETSTATS_HPP

#include "boxcover/graph.hpp"

namespace boxcover {

struct StatsReport {
  std::size_t n = 0;
  std::size_t e = 0;
  int diameter = 0;
  double gini = 0.0;
  double clustering = 0.0;
};

/// Degree inequality: (N+1)/N - 2 * sum_i (N-i) k_i / (N * sum_i k_i), with
/// degrees k sorted ascending. 0 for regular graphs, bounded by 1 + 1/N.
double gini(const Graph& g);

/// Local clustering of v; nodes of degree < 2 have clustering 0.
double local_clustering(const Graph& g, Node v);
double average_clustering(const Graph& g);

StatsReport basic_stats(const Graph& g, const DistanceMatrix& dm);

}  // namespace boxcover

#endif
