#include <doctest.h>

#include "boxcover/boxing.hpp"
#include "boxcover/burners.hpp"
#include "boxcover/oracle.hpp"
#include "support/corpus.hpp"

#include <json.hpp>

using namespace boxcover;

TEST_CASE("size conventions") {
  CHECK(equivalent_eval_size(SizeSpec::radius(2)) == SizeSpec::eval(5));
  CHECK(equivalent_eval_size(SizeSpec::impl(1)) == SizeSpec::eval(2));
  CHECK(equivalent_eval_size(SizeSpec::eval(7)) == SizeSpec::eval(7));
  CHECK_THROWS_AS(equivalent_radius(SizeSpec::eval(4)), Error);
  CHECK_THROWS_AS(equivalent_radius(SizeSpec::impl(3)), Error);
  CHECK(equivalent_radius(SizeSpec::impl(4)) == SizeSpec::radius(2));
  CHECK(equivalent_impl_size(SizeSpec::radius(3)) == SizeSpec::impl(6));

  for (int v = 1; v <= 200; ++v) {
    auto e = equivalent_eval_size(SizeSpec::radius(v));
    REQUIRE(e.value % 2 == 1);
    REQUIRE(e.value == 2 * v + 1);
    REQUIRE(equivalent_radius(e) == SizeSpec::radius(v));
    REQUIRE(equivalent_impl_size(equivalent_eval_size(SizeSpec::impl(v))) == SizeSpec::impl(v));
    REQUIRE(equivalent_eval_size(SizeSpec::impl(v)).value == v + 1);
  }
}

TEST_CASE("validate_cover") {
  auto dm = all_pairs_distances(path_graph(4));
  SUBCASE("clean partition") {
    Cover c{{{0, 1}, {2, 3}}, CoverMode::Partition, SizeSpec::impl(1)};
    CHECK(validate_cover(c, dm).valid());
  }
  SUBCASE("diameter violations are listed per box") {
    Cover c{{{0, 2}, {1, 3}}, CoverMode::Partition, SizeSpec::impl(1)};
    auto r = validate_cover(c, dm);
    CHECK_FALSE(r.valid());
    CHECK(r.diameter_violations == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("uncovered and doubly covered nodes") {
    Cover c{{{0, 1}, {1, 2}}, CoverMode::Partition, SizeSpec::impl(1)};
    auto r = validate_cover(c, dm);
    CHECK(r.uncovered == NodeSet{3});
    CHECK(r.multiply_covered == NodeSet{1});
    c.mode = CoverMode::Overlapping;
    r = validate_cover(c, dm);
    CHECK(r.multiply_covered.empty());
    CHECK_FALSE(r.valid());
  }
  SUBCASE("empty and out of range boxes") {
    Cover c{{{0, 1}, {}, {2, 3}, {9}}, CoverMode::Partition, SizeSpec::impl(1)};
    auto r = validate_cover(c, dm);
    CHECK(r.empty_boxes == std::vector<std::size_t>{1});
    CHECK(r.out_of_range_boxes == std::vector<std::size_t>{3});
  }
  SUBCASE("centers rule") {
    Cover c{{{0, 1, 2}, {3}}, CoverMode::Partition, SizeSpec::radius(1), NodeSet{0, 3}};
    auto r = validate_cover(c, dm);
    CHECK(r.center_violations == std::vector<std::size_t>{0});
    c.centers = NodeSet{1, 3};
    CHECK(validate_cover(c, dm).valid());
  }
}

TEST_CASE("build_boxes_from_centers") {
  SUBCASE("star around its hub") {
    Graph s = star_graph(4);
    auto dm = all_pairs_distances(s);
    Rng rng(1);
    Cover c = build_boxes_from_centers(NodeSet{0}, s, dm, 1, rng);
    REQUIRE(c.box_count() == 1);
    CHECK(c.boxes[0] == NodeSet{0, 1, 2, 3});
  }
  SUBCASE("path with both ends as centers") {
    Graph p = path_graph(4);
    auto dm = all_pairs_distances(p);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      Cover c = build_boxes_from_centers(NodeSet{0, 3}, p, dm, 1, rng);
      REQUIRE(c.box_count() == 2);
      CHECK(c.boxes[0] == NodeSet{0, 1});
      CHECK(c.boxes[1] == NodeSet{2, 3});
    }
  }
  SUBCASE("uncoverable node") {
    Graph p = path_graph(5);
    auto dm = all_pairs_distances(p);
    Rng rng(1);
    CHECK_THROWS_AS(build_boxes_from_centers(NodeSet{0}, p, dm, 1, rng), Error);
  }
  SUBCASE("connected boxes and fixed count over the corpus") {
    for (const auto& g : testsupport::corpus(200)) {
      auto dm = all_pairs_distances(g);
      for (int r = 1; r <= std::max(1, dm.diameter()); ++r) {
        Rng pick(r * 31 + g.size());
        auto centers = memb_centers(dm, r, pick);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          Rng rng(seed);
          Cover c = build_boxes_from_centers(centers, g, dm, r, rng);
          REQUIRE(c.box_count() == centers.size());
          REQUIRE(validate_cover(c, dm).valid());
          for (const auto& box : c.boxes) REQUIRE(box_is_connected(g, box));
          std::size_t total = 0;
          for (const auto& box : c.boxes) total += box.size();
          REQUIRE(total == g.size());
        }
      }
    }
  }
}

TEST_CASE("cover JSON") {
  Graph p = path_graph(4);
  Cover c{{{0, 1}, {2, 3}}, CoverMode::Partition, SizeSpec::impl(1)};
  auto j = nlohmann::json::parse(cover_to_json(c, p));
  CHECK(j["mode"] == "partition");
  CHECK(j["eval_size"] == 2);
  CHECK(j["boxes"].size() == 2);
  CHECK(j["boxes"][1][0] == 2);
  CHECK_FALSE(j.contains("centers"));
}
