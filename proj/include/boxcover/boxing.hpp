#ifndef BOXCOVER_BOXING_HPP
#define BOXCOVER_BOXING_HPP

#include <optional>
#include <string>

#include "boxcover/graph.hpp"

namespace boxcover {

/// Box-size conventions. Algorithms compute with the implementation
/// convention (intra-box distance <= l̃); reports use the evaluation convention
/// (distance < l_B). l_B = l̃ + 1 = 2 r + 1.
enum class SizeKind { Radius, ImplDiameter, EvalDiameter };

struct SizeSpec {
  SizeKind kind = SizeKind::EvalDiameter;
  int value = 1;

  static SizeSpec radius(int r) { return {SizeKind::Radius, r}; }
  static SizeSpec impl(int l) { return {SizeKind::ImplDiameter, l}; }
  static SizeSpec eval(int l) { return {SizeKind::EvalDiameter, l}; }

  friend bool operator==(const SizeSpec&, const SizeSpec&) = default;
};

SizeSpec equivalent_eval_size(SizeSpec s);
/// Implementation-convention diameter l̃ (eval - 1). Throws on eval size 1.
SizeSpec equivalent_impl_size(SizeSpec s);
/// Radius r with 2r + 1 = eval. Throws on even eval sizes.
SizeSpec equivalent_radius(SizeSpec s);

std::string to_string(SizeKind k);

enum class CoverMode { Partition, Overlapping };

struct Cover {
  std::vector<NodeSet> boxes;
  CoverMode mode = CoverMode::Partition;
  SizeSpec produced_for;
  std::optional<NodeSet> centers;

  std::size_t box_count() const { return boxes.size(); }
};

struct CoverReport {
  NodeSet uncovered;
  NodeSet multiply_covered;  // Partition mode only
  std::vector<std::size_t> empty_boxes;
  std::vector<std::size_t> diameter_violations;
  std::vector<std::size_t> center_violations;
  std::vector<std::size_t> out_of_range_boxes;

  bool valid() const {
    return uncovered.empty() && multiply_covered.empty() && empty_boxes.empty() &&
           diameter_violations.empty() && center_violations.empty() &&
           out_of_range_boxes.empty();
  }
  std::string describe() const;
};

/// Checks coverage, disjointness (Partition), the diameter rule d <= l̃ for
/// every intra-box pair, and, when centers are present, d(member, center) <= r.
CoverReport validate_cover(const Cover& c, const DistanceMatrix& dm);

/// Largest intra-box distance.
int box_diameter(const DistanceMatrix& dm, std::span<const Node> box);

/// True if the subgraph induced by `box` is connected.
bool box_is_connected(const Graph& g, std::span<const Node> box);

/// Assigns every node to a center: centers seed singleton boxes, remaining
/// nodes are processed by increasing distance to their nearest center and each
/// joins the box of a uniformly drawn neighbour that is strictly closer to a
/// center. Boxes are connected and |boxes| = |centers|.
Cover build_boxes_from_centers(std::span<const Node> centers, const Graph& g,
                               const DistanceMatrix& dm, int radius, Rng& rng);

/// Same, but always joins the lowest-id eligible neighbour (RNG-free).
Cover build_boxes_from_centers(std::span<const Node> centers, const Graph& g,
                               const DistanceMatrix& dm, int radius);

/// JSON text {mode, eval_size, boxes: [[labels]], centers?}. Labels are emitted
/// as integers when every label of the graph is an integer.
std::string cover_to_json(const Cover& c, const Graph& g);

}  // namespace boxcover

#endif
