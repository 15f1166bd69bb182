#include "boxcover/burners.hpp"

#include <algorithm>
#include <limits>

namespace boxcover {

namespace {

void sort_boxes(std::vector<NodeSet>& boxes) {
  for (auto& b : boxes) std::sort(b.begin(), b.end());
}

NodeSet all_nodes(std::size_t n) {
  NodeSet v(n);
  for (Node i = 0; i < n; ++i) v[i] = i;
  return v;
}

template <typename Pred>
void erase_if_stable(NodeSet& v, Pred pred) {
  v.erase(std::remove_if(v.begin(), v.end(), pred), v.end());
}

// Uniform choice among non-center nodes of maximal mass.
Node pick_max_mass(std::span<const int> mass, const std::vector<bool>& is_center, Rng& rng) {
  int best = std::numeric_limits<int>::min();
  NodeSet ties;
  for (Node v = 0; v < mass.size(); ++v) {
    if (is_center[v]) continue;
    if (mass[v] > best) {
      best = mass[v];
      ties.clear();
    }
    if (mass[v] == best) ties.push_back(v);
  }
  return rng.pick(ties);
}

}  // namespace

Graph auxiliary_graph(const DistanceMatrix& dm, int impl_size) {
  std::vector<std::pair<Node, Node>> edges;
  const std::size_t n = dm.size();
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v)
      if (dm(u, v) > impl_size) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<Node> greedy_color(const Graph& aux, std::span<const Node> order) {
  constexpr Node none = std::numeric_limits<Node>::max();
  std::vector<Node> color(aux.size(), none);
  std::vector<std::size_t> stamp(aux.size() + 1, 0);
  std::size_t tick = 0;
  for (Node v : order) {
    ++tick;
    for (Node w : aux.neighbors(v))
      if (color[w] != none) stamp[color[w]] = tick;
    Node c = 0;
    while (stamp[c] == tick) ++c;
    color[v] = c;
  }
  return color;
}

std::size_t color_count(std::span<const Node> colors) {
  if (colors.empty()) return 0;
  return static_cast<std::size_t>(*std::max_element(colors.begin(), colors.end())) + 1;
}

std::vector<NodeSet> color_classes(std::span<const Node> colors) {
  std::vector<NodeSet> classes(color_count(colors));
  for (Node v = 0; v < colors.size(); ++v) classes[colors[v]].push_back(v);
  return classes;
}

Cover greedy_coloring(const Graph& aux, int impl_size, Rng& rng) {
  NodeSet order = all_nodes(aux.size());
  rng.shuffle(order);
  Cover c;
  c.boxes = color_classes(greedy_color(aux, order));
  c.produced_for = SizeSpec::impl(impl_size);
  return c;
}

Cover greedy_coloring(const DistanceMatrix& dm, int impl_size, Rng& rng) {
  return greedy_coloring(auxiliary_graph(dm, impl_size), impl_size, rng);
}

Cover random_sequential(const DistanceMatrix& dm, int radius, Rng& rng) {
  NodeSet uncovered = all_nodes(dm.size());
  Cover c;
  c.produced_for = SizeSpec::radius(radius);
  c.centers.emplace();
  while (!uncovered.empty()) {
    const Node center = rng.pick(uncovered);
    NodeSet box;
    erase_if_stable(uncovered, [&](Node v) {
      if (dm(center, v) > radius) return false;
      box.push_back(v);
      return true;
    });
    c.boxes.push_back(std::move(box));
    c.centers->push_back(center);
  }
  return c;
}

Cover cbb(const DistanceMatrix& dm, int impl_size, Rng& rng) {
  NodeSet uncovered = all_nodes(dm.size());
  Cover c;
  c.produced_for = SizeSpec::impl(impl_size);
  while (!uncovered.empty()) {
    NodeSet box;
    NodeSet candidates = uncovered;
    while (!candidates.empty()) {
      const Node p = rng.pick(candidates);
      box.push_back(p);
      erase_if_stable(candidates, [&](Node v) { return v == p || dm(p, v) > impl_size; });
    }
    std::sort(box.begin(), box.end());
    erase_if_stable(uncovered, [&](Node v) { return std::binary_search(box.begin(), box.end(), v); });
    c.boxes.push_back(std::move(box));
  }
  return c;
}

std::vector<int> excluded_mass(const DistanceMatrix& dm, int radius,
                               const std::vector<bool>& covered) {
  const std::size_t n = dm.size();
  NodeSet open;
  for (Node v = 0; v < n; ++v)
    if (!covered[v]) open.push_back(v);
  std::vector<int> mass(n, 0);
  for (Node i = 0; i < n; ++i)
    for (Node u : open)
      if (dm(i, u) <= radius) ++mass[i];
  return mass;
}

namespace {

void cover_ball(const DistanceMatrix& dm, Node c, int radius, std::vector<bool>& covered,
                std::size_t& remaining) {
  for (Node v = 0; v < dm.size(); ++v)
    if (!covered[v] && dm(c, v) <= radius) {
      covered[v] = true;
      --remaining;
    }
}

}  // namespace

NodeSet memb_centers(const DistanceMatrix& dm, int radius, Rng& rng) {
  const std::size_t n = dm.size();
  std::vector<bool> covered(n, false), is_center(n, false);
  std::size_t remaining = n;
  NodeSet centers;
  while (remaining > 0) {
    const auto mass = excluded_mass(dm, radius, covered);
    const Node p = pick_max_mass(mass, is_center, rng);
    centers.push_back(p);
    is_center[p] = true;
    cover_ball(dm, p, radius, covered, remaining);
  }
  return centers;
}

Cover memb(const Graph& g, const DistanceMatrix& dm, int radius, Rng& rng) {
  const auto centers = memb_centers(dm, radius, rng);
  return build_boxes_from_centers(centers, g, dm, radius, rng);
}

NodeSet remcc_centers(const DistanceMatrix& dm, int radius) {
  const std::size_t n = dm.size();
  std::vector<double> mean_dist(n, 0.0);
  if (n > 1)
    for (Node i = 0; i < n; ++i)
      mean_dist[i] = dm.matrix().col(i).cast<double>().sum() / static_cast<double>(n - 1);

  std::vector<bool> covered(n, false);
  std::size_t remaining = n;
  NodeSet centers;
  while (remaining > 0) {
    const auto mass = excluded_mass(dm, radius, covered);
    Node best = 0;
    double best_score = -1.0;
    for (Node v = 0; v < n; ++v) {
      if (covered[v]) continue;
      const double f = mass[v] * mean_dist[v];
      if (f > best_score) {
        best_score = f;
        best = v;
      }
    }
    centers.push_back(best);
    cover_ball(dm, best, radius, covered, remaining);
  }
  return centers;
}

Cover remcc(const Graph& g, const DistanceMatrix& dm, int radius) {
  return build_boxes_from_centers(remcc_centers(dm, radius), g, dm, radius);
}

NodeSet mcwr_centers(const DistanceMatrix& dm, int radius, double mix, Rng& rng) {
  const std::size_t n = dm.size();
  std::vector<NodeSet> balls(n);
  std::vector<int> mass(n);
  for (Node v = 0; v < n; ++v) {
    balls[v] = ball(dm, v, radius);
    mass[v] = static_cast<int>(balls[v].size());
  }
  std::vector<bool> covered(n, false), is_center(n, false);
  std::size_t remaining = n;
  NodeSet centers;
  while (remaining > 0) {
    // the coin is only consumed when it can matter, so mix = 1 replays MEMB
    const bool greedy = mix >= 1.0 || (mix > 0.0 && rng.uniform() < mix);
    Node v;
    if (greedy) {
      v = pick_max_mass(mass, is_center, rng);
    } else {
      do {
        v = static_cast<Node>(rng.index(n));
      } while (is_center[v] || mass[v] == 0);
    }
    for (Node fresh : balls[v]) {
      if (covered[fresh]) continue;
      covered[fresh] = true;
      --remaining;
      for (Node l : balls[fresh]) --mass[l];
    }
    centers.push_back(v);
    is_center[v] = true;
  }
  return centers;
}

Cover mcwr(const Graph& g, const DistanceMatrix& dm, int radius, double mix, Rng& rng) {
  const auto centers = mcwr_centers(dm, radius, mix, rng);
  return build_boxes_from_centers(centers, g, dm, radius, rng);
}

namespace {

bool union_fits(const DistanceMatrix& dm, const NodeSet& a, const NodeSet& b, int limit) {
  for (Node u : a)
    for (Node v : b)
      if (dm(u, v) > limit) return false;
  return true;
}

void swap_remove(std::vector<NodeSet>& v, std::size_t i) {
  std::swap(v[i], v.back());
  v.pop_back();
}

}  // namespace

void merge_sweeps(const DistanceMatrix& dm, std::vector<NodeSet>& clusters, int limit, Rng& rng) {
  bool merged_any = true;
  std::vector<std::size_t> partners;
  while (merged_any) {
    merged_any = false;
    std::vector<NodeSet> pool = std::move(clusters);
    clusters.clear();
    while (!pool.empty()) {
      const std::size_t i = rng.index(pool.size());
      partners.clear();
      for (std::size_t j = 0; j < pool.size(); ++j)
        if (j != i && union_fits(dm, pool[i], pool[j], limit)) partners.push_back(j);
      if (partners.empty()) {
        clusters.push_back(std::move(pool[i]));
        swap_remove(pool, i);
        continue;
      }
      const std::size_t j = rng.pick(partners);
      NodeSet merged = std::move(pool[i]);
      merged.insert(merged.end(), pool[j].begin(), pool[j].end());
      clusters.push_back(std::move(merged));
      swap_remove(pool, std::max(i, j));
      swap_remove(pool, std::min(i, j));
      merged_any = true;
    }
  }
}

std::vector<Cover> merge_algorithm(const DistanceMatrix& dm, int max_impl_size, Rng& rng,
                                   const std::function<void(int)>& on_level) {
  std::vector<NodeSet> clusters;
  for (Node v = 0; v < dm.size(); ++v) clusters.push_back({v});
  std::vector<Cover> levels;
  for (int l = 1; l <= max_impl_size; ++l) {
    merge_sweeps(dm, clusters, l, rng);
    Cover c;
    c.boxes = clusters;
    sort_boxes(c.boxes);
    std::sort(c.boxes.begin(), c.boxes.end());
    c.produced_for = SizeSpec::impl(l);
    levels.push_back(std::move(c));
    if (on_level) on_level(l);
  }
  return levels;
}

}  // namespace boxcover
