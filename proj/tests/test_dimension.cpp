#include <doctest.h>

#include <cmath>

#include "boxcover/dimension.hpp"

using namespace boxcover;

namespace {

std::vector<ScalingPoint> power_law(double c, double d, std::initializer_list<double> sizes) {
  std::vector<ScalingPoint> out;
  for (double l : sizes) out.push_back({l, c * std::pow(l, -d)});
  return out;
}

}  // namespace

TEST_CASE("exact power law") {
  auto pts = power_law(1000.0, 2.0, {1, 2, 3, 5, 8, 13});
  auto fit = fit_dimension(pts);
  CHECK(fit.dimension == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.sse == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(fit.intercept == doctest::Approx(std::log(1000.0)));
  CHECK(fit.n_points == 6);
  CHECK(fit.range.min == 1.0);
  CHECK(fit.range.max == 13.0);
}

TEST_CASE("refusals") {
  CHECK_THROWS_AS(fit_dimension(power_law(10, 1, {3})), FitRefused);
  CHECK_THROWS_AS(fit_dimension(power_law(10, 1, {3, 5})), FitRefused);
  std::vector<ScalingPoint> flat_x{{3, 10}, {3, 8}, {3, 6}};
  CHECK_THROWS_AS(fit_dimension(flat_x), FitRefused);
  auto pts = power_law(10, 1, {1, 2, 3, 4, 5});
  CHECK_THROWS_AS(fit_dimension(pts, SizeRange{4, 5}), FitRefused);
  CHECK(fit_dimension(pts, SizeRange{2, 4}).n_points == 3);
  std::vector<ScalingPoint> zero{{1, 4}, {2, 0}, {3, 1}};
  CHECK_THROWS_AS(fit_dimension(zero), Error);
}

TEST_CASE("sse matches the closed form") {
  std::vector<ScalingPoint> pts{{3, 40}, {5, 22}, {7, 13}, {9, 11}, {11, 6}};
  double sx = 0, sy = 0;
  const double n = double(pts.size());
  for (auto p : pts) {
    sx += std::log(p.box_size);
    sy += std::log(p.boxes);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (auto p : pts) {
    sxx += (std::log(p.box_size) - mx) * (std::log(p.box_size) - mx);
    sxy += (std::log(p.box_size) - mx) * (std::log(p.boxes) - my);
  }
  const double slope = sxy / sxx, icpt = my - slope * mx;
  double res = 0;
  for (auto p : pts) {
    const double e = std::log(p.boxes) - (icpt + slope * std::log(p.box_size));
    res += e * e;
  }
  auto fit = fit_dimension(pts);
  CHECK(fit.dimension == doctest::Approx(-slope).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(icpt).epsilon(1e-12));
  CHECK(fit.sse == doctest::Approx(std::sqrt(res / ((n - 2) * sxx))).epsilon(1e-12));
}

TEST_CASE("scaling the counts moves only the intercept") {
  std::vector<ScalingPoint> pts{{3, 40}, {5, 22}, {7, 13}, {9, 11}, {11, 6}};
  auto base = fit_dimension(pts);
  for (auto& p : pts) p.boxes *= 7.5;
  auto scaled = fit_dimension(pts);
  CHECK(scaled.dimension == doctest::Approx(base.dimension).epsilon(1e-12));
  CHECK(scaled.sse == doctest::Approx(base.sse).epsilon(1e-9));
  CHECK(scaled.intercept == doctest::Approx(base.intercept + std::log(7.5)).epsilon(1e-12));
}

TEST_CASE("path segment counting gives dimension one") {
  std::vector<ScalingPoint> pts;
  for (int l = 3; l <= 21; l += 2) pts.push_back({double(l), std::ceil(200.0 / l)});
  auto fit = fit_dimension(pts);
  CHECK(fit.dimension >= 0.85);
  CHECK(fit.dimension <= 1.15);
}

TEST_CASE("range suggestions") {
  SUBCASE("linear data keeps the full range") {
    auto s = auto_range(power_law(500, 1.7, {1, 2, 3, 4, 6, 8}));
    CHECK(s.fit.n_points == 6);
    CHECK_FALSE(s.low_confidence);
  }
  SUBCASE("flat tail is pruned") {
    auto pts = power_law(800, 2.0, {1, 2, 3, 4, 5});
    for (double l : {7.0, 9.0, 11.0, 13.0}) pts.push_back({l, 2.0 + 0.3 * std::sin(l)});
    auto s = auto_range(pts);
    CHECK(s.fit.range.min == 1.0);
    CHECK(s.fit.range.max <= 5.0);
    CHECK(s.fit.dimension == doctest::Approx(2.0).epsilon(1e-6));
  }
  SUBCASE("noise gives a flagged three point window") {
    std::vector<ScalingPoint> pts{{1, 5}, {2, 9}, {3, 4}, {4, 8}, {5, 3}, {6, 7}};
    auto s = auto_range(pts);
    CHECK(s.fit.n_points >= 3);
    CHECK(s.low_confidence);
  }
  SUBCASE("too few points") {
    CHECK_THROWS(auto_range(power_law(10, 1, {1, 2, 3})));
  }
}
