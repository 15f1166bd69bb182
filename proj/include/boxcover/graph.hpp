#ifndef BOXCOVER_GRAPH_HPP
#define BOXCOVER_GRAPH_HPP

#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "boxcover/types.hpp"

namespace boxcover {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Undirected simple graph on nodes 0..n-1 with sorted adjacency lists.
/// Original input labels are retained so results can be reported in the
/// caller's ids.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Self-loops and duplicate edges are dropped,
  /// direction is ignored. `labels` may be empty (ids are then used as labels).
  Graph(std::size_t n, std::span<const std::pair<Node, Node>> edges,
        std::vector<std::string> labels = {});

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Node> neighbors(Node v) const { return adjacency_[v]; }
  std::size_t degree(Node v) const { return adjacency_[v].size(); }
  bool has_edge(Node u, Node v) const;

  const std::string& label(Node v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Node, Node>> edges() const;

 private:
  std::vector<std::vector<Node>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Parses whitespace-separated edge list text. '#' lines are comments, extra
/// columns are ignored, labels are remapped to 0..N-1 in first-occurrence order.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Writes `u v` label pairs, one edge per line.
void write_edge_list(std::ostream& out, const Graph& g);

/// Connected components as node lists, each sorted, ordered by smallest member.
std::vector<NodeSet> connected_components(const Graph& g);

/// Largest connected component as a relabelled graph (labels carried over).
/// Among equally large components the one holding the smallest label wins
/// (integer labels compare numerically).
Graph largest_component(const Graph& g);

/// Induced subgraph on `nodes` (relabelled in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Node> nodes);

/// Dense hop-distance matrix.
template <typename Scalar>
class BasicDistanceMatrix {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  BasicDistanceMatrix() = default;
  explicit BasicDistanceMatrix(Matrix d) : d_(std::move(d)) {}

  std::size_t size() const { return static_cast<std::size_t>(d_.rows()); }
  Scalar operator()(Node i, Node j) const { return d_(i, j); }
  const Matrix& matrix() const { return d_; }
  int diameter() const { return size() == 0 ? 0 : static_cast<int>(d_.maxCoeff()); }

 private:
  Matrix d_;
};

using DistanceMatrix = BasicDistanceMatrix<std::uint16_t>;

/// BFS from every node. Throws if the graph is disconnected.
DistanceMatrix all_pairs_distances(const Graph& g);

/// { v : d(v, c) <= r }, ascending.
NodeSet ball(const DistanceMatrix& dm, Node c, int r);

}  // namespace boxcover

#endif
