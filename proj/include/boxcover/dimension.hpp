#ifndef BOXCOVER_DIMENSION_HPP
#define BOXCOVER_DIMENSION_HPP

#include <optional>
#include <span>
#include <vector>

#include "boxcover/types.hpp"

namespace boxcover {

/// Raised when a regression cannot be carried out (too few points, no spread
/// in l_B). Reports encode this as d_B = -1.
class FitRefused : public Error {
 public:
  using Error::Error;
};

struct ScalingPoint {
  double box_size = 0.0;  // eval convention l_B
  double boxes = 0.0;     // mean N_B
};

struct SizeRange {
  double min = 0.0;
  double max = 0.0;
};

struct DimensionFit {
  double dimension = 0.0;  // -slope of log N_B against log l_B
  double intercept = 0.0;
  double sse = 0.0;        // sqrt( sum residual^2 / ((n-2) sum (x - xbar)^2) )
  SizeRange range;
  std::size_t n_points = 0;
};

/// Least squares on (ln l_B, ln N_B) using the points whose l_B lies in
/// `range` (all points when absent).
DimensionFit fit_dimension(std::span<const ScalingPoint> points,
                           std::optional<SizeRange> range = std::nullopt);

struct RangeSuggestion {
  DimensionFit fit;
  bool low_confidence = false;
};

/// Contiguous window of at least three points (ordered by l_B) with the
/// smallest fit error, preferring longer windows on ties. Needs >= 4 points.
RangeSuggestion auto_range(std::span<const ScalingPoint> points);

}  // namespace boxcover

#endif
