#include <doctest.h>

#include <set>

#include "boxcover/burners.hpp"
#include "boxcover/oracle.hpp"
#include "support/corpus.hpp"

using namespace boxcover;

namespace {

std::set<std::pair<Node, Node>> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

// Every radius- or diameter-based covering in this module, run at one size.
struct Run {
  const char* name;
  bool radius_based;
  Cover (*run)(const Graph&, const DistanceMatrix&, int, Rng&);
};

const Run kRuns[] = {
    {"gre", false, [](const Graph&, const DistanceMatrix& dm, int s, Rng& r) { return greedy_coloring(dm, s, r); }},
    {"rs", true, [](const Graph&, const DistanceMatrix& dm, int s, Rng& r) { return random_sequential(dm, s, r); }},
    {"cbb", false, [](const Graph&, const DistanceMatrix& dm, int s, Rng& r) { return cbb(dm, s, r); }},
    {"memb", true, [](const Graph& g, const DistanceMatrix& dm, int s, Rng& r) { return memb(g, dm, s, r); }},
    {"remcc", true, [](const Graph& g, const DistanceMatrix& dm, int s, Rng&) { return remcc(g, dm, s); }},
    {"mc.5", true, [](const Graph& g, const DistanceMatrix& dm, int s, Rng& r) { return mcwr(g, dm, s, 0.5, r); }},
    {"mer", false, [](const Graph&, const DistanceMatrix& dm, int s, Rng& r) { return merge_algorithm(dm, s, r).back(); }},
};

}  // namespace

TEST_CASE("auxiliary graph") {
  auto p4 = all_pairs_distances(path_graph(4));
  Graph aux = auxiliary_graph(p4, 1);
  CHECK(edge_set(aux) == std::set<std::pair<Node, Node>>{{0, 2}, {0, 3}, {1, 3}});
  CHECK(auxiliary_graph(p4, 3).edge_count() == 0);
  CHECK(auxiliary_graph(all_pairs_distances(complete_graph(3)), 1).edge_count() == 0);
}

TEST_CASE("greedy colouring") {
  auto dm = all_pairs_distances(path_graph(4));
  Graph aux = auxiliary_graph(dm, 1);
  const Node order[] = {0, 1, 2, 3};
  auto colors = greedy_color(aux, order);
  CHECK(color_count(colors) == 2);
  CHECK(color_classes(colors) == std::vector<NodeSet>{{0, 1}, {2, 3}});
  std::set<std::size_t> outcomes;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    outcomes.insert(greedy_coloring(dm, 1, rng).box_count());
  }
  CHECK(outcomes == std::set<std::size_t>{2, 3});
}

TEST_CASE("random sequential on a star") {
  auto dm = all_pairs_distances(star_graph(4));
  int single = 0;
  const int runs = 10000;
  for (int seed = 0; seed < runs; ++seed) {
    Rng rng(seed);
    Cover c = random_sequential(dm, 1, rng);
    REQUIRE((c.box_count() == 1 || c.box_count() == 3));
    if (c.box_count() == 3) {
      // a leaf went first and took the hub
      REQUIRE(c.centers);
      REQUIRE((*c.centers)[0] != 0);
      CHECK(c.boxes[0].size() == 2);
    }
    single += c.box_count() == 1;
  }
  CHECK(double(single) / runs == doctest::Approx(0.25).epsilon(0.08));
}

TEST_CASE("cbb") {
  auto k3 = all_pairs_distances(complete_graph(3));
  auto p4 = all_pairs_distances(path_graph(4));
  std::set<std::size_t> outcomes;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    CHECK(cbb(k3, 1, rng).box_count() == 1);
    outcomes.insert(cbb(p4, 1, rng).box_count());
  }
  CHECK(outcomes == std::set<std::size_t>{2, 3});

  // compactness: no node outside a box (and uncovered when it was built) fits in it
  for (const auto& g : testsupport::corpus(200)) {
    auto dm = all_pairs_distances(g);
    for (int l = 1; l <= dm.diameter(); ++l) {
      Rng rng(l + 7 * g.size());
      Cover c = cbb(dm, l, rng);
      std::vector<bool> covered_before(g.size(), false);
      for (const auto& box : c.boxes) {
        for (Node v = 0; v < g.size(); ++v) {
          if (covered_before[v] || std::binary_search(box.begin(), box.end(), v)) continue;
          bool fits = true;
          for (Node b : box) fits = fits && dm(v, b) <= l;
          REQUIRE_FALSE(fits);
        }
        for (Node b : box) covered_before[b] = true;
      }
    }
  }
}

TEST_CASE("excluded mass") {
  auto dm = all_pairs_distances(star_graph(4));
  std::vector<bool> covered(4, false);
  CHECK(excluded_mass(dm, 1, covered) == std::vector<int>{4, 2, 2, 2});
  covered[0] = covered[1] = true;
  CHECK(excluded_mass(dm, 1, covered) == std::vector<int>{2, 0, 1, 1});
}

TEST_CASE("memb") {
  Graph s = star_graph(4);
  auto dm = all_pairs_distances(s);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    CHECK(memb_centers(dm, 1, rng) == NodeSet{0});
    Rng again(seed);
    CHECK(memb(s, dm, 1, again).box_count() == 1);
  }
  // box count only depends on the centers, never on the allocation stream
  for (const auto& g : testsupport::corpus(100)) {
    auto d = all_pairs_distances(g);
    Rng pick(3);
    auto centers = memb_centers(d, 1, pick);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      REQUIRE(build_boxes_from_centers(centers, g, d, 1, rng).box_count() == centers.size());
    }
  }
}

TEST_CASE("remcc") {
  Graph s = star_graph(4);
  auto dm = all_pairs_distances(s);
  CHECK(remcc_centers(dm, 1) == NodeSet{0});
  CHECK(remcc_centers(all_pairs_distances(complete_graph(3)), 1).size() == 1);
  for (const auto& g : testsupport::corpus(100)) {
    auto d = all_pairs_distances(g);
    for (int r = 1; r <= d.diameter(); ++r) {
      auto a = remcc(g, d, r);
      auto b = remcc(g, d, r);
      REQUIRE(a.boxes == b.boxes);
      REQUIRE(a.centers == b.centers);
    }
  }
}

TEST_CASE("mcwr") {
  Graph s = star_graph(4);
  auto dm = all_pairs_distances(s);
  SUBCASE("p = 1 follows memb") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng a(seed), b(seed);
      CHECK(mcwr_centers(dm, 1, 1.0, a) == memb_centers(dm, 1, b));
    }
  }
  SUBCASE("p = 0 picks the hub a quarter of the time") {
    int single = 0;
    const int runs = 10000;
    for (int seed = 0; seed < runs; ++seed) {
      Rng rng(seed);
      single += mcwr(s, dm, 1, 0.0, rng).box_count() == 1;
    }
    CHECK(double(single) / runs == doctest::Approx(0.25).epsilon(0.08));
  }
  SUBCASE("incremental masses match recomputation") {
    for (const auto& g : testsupport::corpus(200)) {
      auto d = all_pairs_distances(g);
      for (int r = 1; r <= d.diameter(); ++r) {
        Rng rng(r + 13 * g.size());
        auto centers = mcwr_centers(d, r, 1.0, rng);
        std::vector<bool> covered(g.size(), false), is_center(g.size(), false);
        for (Node c : centers) {
          auto mass = excluded_mass(d, r, covered);
          int best = 0;
          for (Node v = 0; v < g.size(); ++v)
            if (!is_center[v]) best = std::max(best, mass[v]);
          REQUIRE(mass[c] == best);
          REQUIRE(best > 0);
          is_center[c] = true;
          for (Node v : ball(d, c, r)) covered[v] = true;
        }
        REQUIRE(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
      }
    }
  }
}

TEST_CASE("merge") {
  auto k3 = all_pairs_distances(complete_graph(3));
  auto p4 = all_pairs_distances(path_graph(4));
  std::set<std::size_t> outcomes;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    CHECK(merge_algorithm(k3, 1, rng).back().box_count() == 1);
    auto c = merge_algorithm(p4, 1, rng).back();
    outcomes.insert(c.box_count());
    if (c.box_count() == 3) CHECK(c.boxes == std::vector<NodeSet>{{0}, {1, 2}, {3}});
  }
  CHECK(outcomes == std::set<std::size_t>{2, 3});

  for (const auto& g : testsupport::corpus(100)) {
    auto d = all_pairs_distances(g);
    Rng rng(g.size());
    auto levels = merge_algorithm(d, std::max(1, d.diameter()), rng);
    REQUIRE(levels.size() == std::size_t(std::max(1, d.diameter())));
    for (std::size_t l = 0; l < levels.size(); ++l) {
      REQUIRE(levels[l].produced_for == SizeSpec::impl(int(l) + 1));
      REQUIRE(validate_cover(levels[l], d).valid());
      if (l > 0) REQUIRE(levels[l].box_count() <= levels[l - 1].box_count());
    }
  }
}

TEST_CASE("every burner on the random corpus") {
  const auto graphs = testsupport::corpus(500);
  for (const auto& run : kRuns) {
    CAPTURE(run.name);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      auto dm = all_pairs_distances(g);
      auto fw = testsupport::floyd_warshall(g);
      const int diameter = dm.diameter();
      for (int s = 1; s <= diameter; ++s) {
        const int limit = run.radius_based ? 2 * s : s;
        const std::size_t optimum = testsupport::brute_force_min_cover(fw, limit);
        Rng rng(1000 * i + s);
        Cover c = run.run(g, dm, s, rng);
        auto report = validate_cover(c, dm);
        CAPTURE(report.describe());
        REQUIRE(report.valid());
        REQUIRE(c.mode == CoverMode::Partition);
        REQUIRE(c.box_count() >= optimum);
        REQUIRE(c.box_count() <= g.size());
        if (s >= diameter) REQUIRE(c.box_count() == 1);
        Rng again(1000 * i + s);
        REQUIRE(run.run(g, dm, s, again).boxes == c.boxes);
      }
    }
  }
}
