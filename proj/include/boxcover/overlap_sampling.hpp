#ifndef BOXCOVER_OVERLAP_SAMPLING_HPP
#define BOXCOVER_OVERLAP_SAMPLING_HPP

#include "boxcover/boxing.hpp"

namespace boxcover {

/// Overlapping box covering. Candidate centers are visited by ascending degree
/// (ties by id); a proposal is the center's l̃-ball pruned to diameter l̃;
/// redundant proposals are dropped at the end. Deterministic.
Cover obca(const Graph& g, const DistanceMatrix& dm, int impl_size);

/// Per-node count of boxes containing it.
std::vector<int> covered_frequency(const Cover& c, std::size_t n);

struct FuzzyPoint {
  double radius = 0.0;
  double inverse_boxes = 0.0;  // average covered fraction N^-1(r)
  double boxes = 0.0;          // 1 / N^-1(r); an estimate, not a cover
};

/// Fuzzy box-counting estimate for each radius. Requires N >= 2.
std::vector<FuzzyPoint> fuzzy(const DistanceMatrix& dm, std::span<const double> radii);

using ProposalSet = std::vector<NodeSet>;

/// Maximal box sampling: `count` proposals, each grown from a seed (drawn from
/// the not-yet-proposed nodes while any remain) by repeatedly adding a random
/// node compatible with every member so far. Keeps drawing past `count` while
/// some node is still outside every proposal.
ProposalSet maximal_box_sampling(const DistanceMatrix& dm, int impl_size, int count, Rng& rng);

/// Boxes of `rounds` independent random-sequential covers, pooled.
ProposalSet random_sequential_proposals(const DistanceMatrix& dm, int radius, int rounds, Rng& rng);

enum class SelectionStrategy { BigBoxFirst, SmallBoxRemoval };

/// Greedy selection of a partition from proposals that jointly cover V.
Cover select_boxes(const ProposalSet& proposals, SelectionStrategy strategy, std::size_t n,
                   SizeSpec size);

}  // namespace boxcover

#endif
