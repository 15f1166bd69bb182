#ifndef BOXCOVER_BURNERS_HPP
#define BOXCOVER_BURNERS_HPP

#include <functional>

#include "boxcover/boxing.hpp"

namespace boxcover {

/// Same nodes; (u, v) is an edge iff d(u, v) > l̃. Colour classes of this
/// graph are exactly the admissible boxes.
Graph auxiliary_graph(const DistanceMatrix& dm, int impl_size);

/// Sequential greedy colouring: every node in `order` gets the smallest colour
/// not used by an already coloured neighbour. Returns the colour per node.
std::vector<Node> greedy_color(const Graph& aux, std::span<const Node> order);
std::size_t color_count(std::span<const Node> colors);
std::vector<NodeSet> color_classes(std::span<const Node> colors);

/// Greedy colouring of the auxiliary graph in a uniformly random order.
Cover greedy_coloring(const Graph& aux, int impl_size, Rng& rng);
Cover greedy_coloring(const DistanceMatrix& dm, int impl_size, Rng& rng);

/// Random sequential: uniform uncovered center, box = uncovered part of its ball.
/// Boxes may be disconnected.
Cover random_sequential(const DistanceMatrix& dm, int radius, Rng& rng);

/// Compact-box burning.
Cover cbb(const DistanceMatrix& dm, int impl_size, Rng& rng);

/// Number of uncovered nodes within `radius` of each node.
std::vector<int> excluded_mass(const DistanceMatrix& dm, int radius,
                               const std::vector<bool>& covered);

/// Maximum excluded mass burning. Masses are recomputed from scratch each
/// round; ties are broken uniformly. Covered nodes may become centers.
NodeSet memb_centers(const DistanceMatrix& dm, int radius, Rng& rng);
Cover memb(const Graph& g, const DistanceMatrix& dm, int radius, Rng& rng);

/// Centers maximising excluded mass times mean distance, drawn from uncovered
/// nodes only, lowest id on ties. Deterministic.
NodeSet remcc_centers(const DistanceMatrix& dm, int radius);
Cover remcc(const Graph& g, const DistanceMatrix& dm, int radius);

/// MEMB/RS mix: with probability `mix` the max-mass node, otherwise a uniform
/// non-center node whose ball still holds an uncovered node. Masses are
/// maintained incrementally.
NodeSet mcwr_centers(const DistanceMatrix& dm, int radius, double mix, Rng& rng);
Cover mcwr(const Graph& g, const DistanceMatrix& dm, int radius, double mix, Rng& rng);

/// Successive aggregation from singletons. Element l-1 of the result is the
/// partition for l̃ = l, for l = 1..max_impl_size.
/// `on_level` is called after each level completes.
std::vector<Cover> merge_algorithm(const DistanceMatrix& dm, int max_impl_size, Rng& rng,
                                   const std::function<void(int)>& on_level = {});

/// Aggregates `clusters` in place at diameter limit `limit`: random sweeps in
/// which each cluster merges at most once, repeated until a sweep merges nothing.
void merge_sweeps(const DistanceMatrix& dm, std::vector<NodeSet>& clusters, int limit, Rng& rng);

}  // namespace boxcover

#endif
