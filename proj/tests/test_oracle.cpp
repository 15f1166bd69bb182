#include <doctest.h>

#include "boxcover/oracle.hpp"
#include "support/corpus.hpp"

using namespace boxcover;

TEST_CASE("exact minimum cover") {
  CHECK(exact_min_cover(all_pairs_distances(path_graph(4)), 1).optimum == 2);
  CHECK(exact_min_cover(all_pairs_distances(path_graph(5)), 1).optimum == 3);
  CHECK(exact_min_cover(all_pairs_distances(cycle_graph(6)), 2).optimum == 2);

  auto r = exact_min_cover(all_pairs_distances(cycle_graph(6)), 2);
  CHECK(r.witness.box_count() == 2);
  CHECK(r.witness.produced_for == SizeSpec::eval(3));

  CHECK_THROWS_AS(exact_min_cover(all_pairs_distances(path_graph(15)), 1), Error);
  CHECK_NOTHROW(exact_min_cover(all_pairs_distances(grid_graph(2, 7)), 2));
}

TEST_CASE("oracle agrees with exhaustive partition search") {
  for (const auto& g : testsupport::corpus(200)) {
    auto dm = all_pairs_distances(g);
    auto fw = testsupport::floyd_warshall(g);
    std::size_t previous = g.size() + 1;
    for (int l = 0; l <= dm.diameter() + 1; ++l) {
      auto r = exact_min_cover(dm, l);
      REQUIRE(r.optimum == testsupport::brute_force_min_cover(fw, l));
      REQUIRE(r.witness.box_count() == r.optimum);
      REQUIRE(validate_cover(r.witness, dm).valid());
      REQUIRE(r.optimum <= previous);
      REQUIRE((r.optimum == 1) == (l >= dm.diameter()));
      if (l == 0) REQUIRE(r.optimum == g.size());
      previous = r.optimum;
    }
  }
}

TEST_CASE("generators") {
  Graph p = generate("path:4");
  CHECK(p.size() == 4);
  CHECK(p.edge_count() == 3);
  CHECK(all_pairs_distances(p).diameter() == 3);

  Graph s = generate("star:4");
  CHECK(s.degree(0) == 3);

  Graph grid = generate("grid:3x3");
  CHECK(grid.size() == 9);
  CHECK(grid.edge_count() == 12);
  CHECK(all_pairs_distances(grid).diameter() == 4);

  CHECK(generate("cycle:6").edge_count() == 6);
  CHECK(generate("complete:5").edge_count() == 10);
  CHECK(generate("grid:4x2").size() == 8);

  CHECK_THROWS_AS(generate("path:0"), Error);
  CHECK_THROWS_AS(generate("cycle:2"), Error);
  CHECK_THROWS_AS(generate("grid:3"), Error);
  CHECK_THROWS_AS(generate("hypercube:3"), Error);
  CHECK_THROWS_AS(generate("path:x"), Error);
}
