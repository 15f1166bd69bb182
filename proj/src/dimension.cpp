#include "boxcover/dimension.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace boxcover {

namespace {

DimensionFit fit_logs(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const auto n = x.size();
  if (n < 3) throw FitRefused("too few points for a dimension fit");
  const double xbar = x.mean();
  const double sxx = (x.array() - xbar).square().sum();
  if (!(sxx > 0.0)) throw FitRefused("box sizes have no spread");

  Eigen::MatrixXd design(n, 2);
  design.col(0) = x;
  design.col(1).setOnes();
  const Eigen::Vector2d beta = design.colPivHouseholderQr().solve(y);
  const double ssr = (y - design * beta).squaredNorm();

  DimensionFit fit;
  fit.dimension = -beta(0);
  fit.intercept = beta(1);
  fit.sse = std::sqrt(ssr / (static_cast<double>(n - 2) * sxx));
  fit.n_points = static_cast<std::size_t>(n);
  fit.range = {std::exp(x.minCoeff()), std::exp(x.maxCoeff())};
  return fit;
}

std::vector<ScalingPoint> sorted_points(std::span<const ScalingPoint> points) {
  std::vector<ScalingPoint> out(points.begin(), points.end());
  for (const auto& p : out)
    if (!(p.boxes > 0.0) || !(p.box_size >= 1.0))
      throw FitRefused("dimension fit needs l_B >= 1 and N_B > 0");
  std::stable_sort(out.begin(), out.end(),
                   [](const ScalingPoint& a, const ScalingPoint& b) { return a.box_size < b.box_size; });
  return out;
}

DimensionFit fit_window(const std::vector<ScalingPoint>& pts, std::size_t first, std::size_t count) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(count)), y(static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) {
    x(static_cast<Eigen::Index>(i)) = std::log(pts[first + i].box_size);
    y(static_cast<Eigen::Index>(i)) = std::log(pts[first + i].boxes);
  }
  auto fit = fit_logs(x, y);
  fit.range = {pts[first].box_size, pts[first + count - 1].box_size};
  return fit;
}

}  // namespace

DimensionFit fit_dimension(std::span<const ScalingPoint> points, std::optional<SizeRange> range) {
  auto pts = sorted_points(points);
  if (range)
    std::erase_if(pts, [&](const ScalingPoint& p) { return p.box_size < range->min || p.box_size > range->max; });
  return fit_window(pts, 0, pts.size());
}

RangeSuggestion auto_range(std::span<const ScalingPoint> points) {
  const auto pts = sorted_points(points);
  if (pts.size() < 4) throw FitRefused("range suggestion needs at least four points");
  constexpr double tie = 1e-9;
  std::optional<DimensionFit> best;
  for (std::size_t len = pts.size(); len >= 3; --len)
    for (std::size_t first = 0; first + len <= pts.size(); ++first) {
      DimensionFit fit;
      try {
        fit = fit_window(pts, first, len);
      } catch (const FitRefused&) {
        continue;
      }
      // longer windows are visited first, so only a strictly smaller error replaces
      if (!best || fit.sse < best->sse - tie) best = fit;
    }
  if (!best) throw FitRefused("no window admits a fit");

  // Confidence: the window must explain most of the variance of its points.
  double ybar = 0.0;
  std::size_t in = 0;
  for (const auto& p : pts)
    if (p.box_size >= best->range.min && p.box_size <= best->range.max) {
      ybar += std::log(p.boxes);
      ++in;
    }
  ybar /= static_cast<double>(in);
  double syy = 0.0, ssr = 0.0;
  for (const auto& p : pts)
    if (p.box_size >= best->range.min && p.box_size <= best->range.max) {
      const double y = std::log(p.boxes);
      const double yhat = best->intercept - best->dimension * std::log(p.box_size);
      syy += (y - ybar) * (y - ybar);
      ssr += (y - yhat) * (y - yhat);
    }
  const double r2 = syy > 0.0 ? 1.0 - ssr / syy : 0.0;
  return {*best, r2 < 0.9 || best->dimension <= 0.0};
}

}  // namespace boxcover
