#include "boxcover/overlap_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "boxcover/burners.hpp"

namespace boxcover {

Cover obca(const Graph& g, const DistanceMatrix& dm, int impl_size) {
  const std::size_t n = dm.size();
  NodeSet by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), Node{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Node a, Node b) { return g.degree(a) < g.degree(b); });

  std::vector<int> freq(n, 0);
  std::vector<NodeSet> proposals;
  std::vector<bool> in_box(n, false);
  for (Node center : by_degree) {
    if (freq[center] > 0) continue;
    NodeSet box = ball(dm, center, impl_size);
    NodeSet order = box;
    std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) { return freq[a] < freq[b]; });
    for (Node v : box) in_box[v] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (!in_box[order[i]]) continue;
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        if (dm(order[i], order[j]) <= impl_size) continue;
        if (order[j] == center) {
          in_box[order[i]] = false;
          break;
        }
        in_box[order[j]] = false;
      }
    }
    NodeSet kept;
    for (Node v : box) {
      if (in_box[v]) {
        kept.push_back(v);
        ++freq[v];
      }
      in_box[v] = false;
    }
    proposals.push_back(std::move(kept));
  }

  Cover c;
  c.mode = CoverMode::Overlapping;
  c.produced_for = SizeSpec::impl(impl_size);
  for (auto& box : proposals) {
    const bool redundant = std::all_of(box.begin(), box.end(), [&](Node v) { return freq[v] > 1; });
    if (redundant) {
      for (Node v : box) --freq[v];
      continue;
    }
    c.boxes.push_back(std::move(box));
  }
  return c;
}

std::vector<int> covered_frequency(const Cover& c, std::size_t n) {
  std::vector<int> f(n, 0);
  for (const auto& box : c.boxes)
    for (Node v : box) ++f[v];
  return f;
}

std::vector<FuzzyPoint> fuzzy(const DistanceMatrix& dm, std::span<const double> radii) {
  const std::size_t n = dm.size();
  if (n < 2) throw Error("fuzzy estimate needs at least two nodes");
  // histogram of pair distances, each unordered pair once
  std::vector<double> pairs(static_cast<std::size_t>(dm.diameter()) + 1, 0.0);
  for (Node j = 0; j < n; ++j)
    for (Node k = j + 1; k < n; ++k) pairs[dm(j, k)] += 1.0;
  const double norm = static_cast<double>(n) * static_cast<double>(n - 1);

  std::vector<FuzzyPoint> out;
  for (double r : radii) {
    if (!(r > 0.0)) throw Error("fuzzy radii must be positive");
    double sum = 0.0;
    for (std::size_t d = 0; d < pairs.size(); ++d) {
      const double dd = static_cast<double>(d);
      if (dd <= r) sum += pairs[d] * 2.0 * std::exp(-dd * dd / (r * r));
    }
    const double inv = sum / norm;
    out.push_back({r, inv, 1.0 / inv});
  }
  return out;
}

ProposalSet maximal_box_sampling(const DistanceMatrix& dm, int impl_size, int count, Rng& rng) {
  if (count < 1) throw Error("maximal box sampling needs at least one proposal");
  const std::size_t n = dm.size();
  NodeSet uncovered(n);
  std::iota(uncovered.begin(), uncovered.end(), Node{0});
  ProposalSet proposals;
  NodeSet candidates;
  for (int i = 0; i < count || !uncovered.empty(); ++i) {
    const Node seed = uncovered.empty() ? static_cast<Node>(rng.index(n)) : rng.pick(uncovered);
    NodeSet box{seed};
    candidates.clear();
    for (Node v = 0; v < n; ++v)
      if (v != seed && dm(seed, v) <= impl_size) candidates.push_back(v);
    while (!candidates.empty()) {
      const std::size_t k = rng.index(candidates.size());
      const Node t = candidates[k];
      box.push_back(t);
      candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(k));
      std::erase_if(candidates, [&](Node v) { return dm(t, v) > impl_size; });
    }
    std::sort(box.begin(), box.end());
    std::erase_if(uncovered, [&](Node v) { return std::binary_search(box.begin(), box.end(), v); });
    proposals.push_back(std::move(box));
  }
  return proposals;
}

ProposalSet random_sequential_proposals(const DistanceMatrix& dm, int radius, int rounds, Rng& rng) {
  ProposalSet proposals;
  for (int i = 0; i < rounds; ++i) {
    auto cover = random_sequential(dm, radius, rng);
    for (auto& b : cover.boxes) proposals.push_back(std::move(b));
  }
  return proposals;
}

namespace {

std::size_t residual(const NodeSet& p, const std::vector<bool>& covered) {
  return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [&](Node v) { return !covered[v]; }));
}

NodeSet take_uncovered(const NodeSet& p, std::vector<bool>& covered) {
  NodeSet out;
  for (Node v : p)
    if (!covered[v]) {
      out.push_back(v);
      covered[v] = true;
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Cover select_boxes(const ProposalSet& proposals, SelectionStrategy strategy, std::size_t n,
                   SizeSpec size) {
  {
    std::vector<bool> hit(n, false);
    for (const auto& p : proposals)
      for (Node v : p) hit[v] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      throw Error("box proposals do not cover every node");
  }

  Cover c;
  c.produced_for = size;
  std::vector<bool> covered(n, false);
  std::vector<std::size_t> order(proposals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> sizes(proposals.size());
  for (std::size_t i = 0; i < proposals.size(); ++i) sizes[i] = proposals[i].size();
  auto by_size = [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; };
  std::stable_sort(order.begin(), order.end(), by_size);

  if (strategy == SelectionStrategy::BigBoxFirst) {
    while (!order.empty() && sizes[order.back()] > 0) {
      const auto& top = proposals[order.back()];
      c.boxes.push_back(take_uncovered(top, covered));
      for (std::size_t i = 0; i < proposals.size(); ++i) sizes[i] = residual(proposals[i], covered);
      std::stable_sort(order.begin(), order.end(), by_size);
    }
    return c;
  }

  std::vector<int> count(n, 0);
  for (const auto& p : proposals)
    for (Node v : p) ++count[v];
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto& p = proposals[order[pos]];
    const bool unique = std::any_of(p.begin(), p.end(), [&](Node v) { return count[v] == 1; });
    if (!unique) {
      for (Node v : p) --count[v];
      continue;
    }
    for (Node v : p)
      if (!covered[v]) count[v] = 0;
    auto box = take_uncovered(p, covered);
    if (!box.empty()) c.boxes.push_back(std::move(box));
    for (std::size_t i = 0; i < proposals.size(); ++i) sizes[i] = residual(proposals[i], covered);
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(pos) + 1, order.end(), by_size);
  }
  return c;
}

}  // namespace boxcover
