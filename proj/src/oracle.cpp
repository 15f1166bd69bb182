#include "boxcover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace boxcover {

namespace {

using Mask = std::uint32_t;

class BranchAndBound {
 public:
  BranchAndBound(const DistanceMatrix& dm, int limit) : n_(dm.size()), compat_(n_, 0) {
    for (Node u = 0; u < n_; ++u)
      for (Node v = 0; v < n_; ++v)
        if (dm(u, v) <= limit) compat_[u] |= Mask{1} << v;
    // most constrained nodes first
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Node{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Node a, Node b) {
      return std::popcount(compat_[a]) < std::popcount(compat_[b]);
    });
    best_ = n_;
    for (Node v = 0; v < n_; ++v) best_boxes_.push_back(Mask{1} << v);
  }

  void solve() {
    std::vector<Mask> boxes;
    search(0, boxes);
  }

  std::size_t best() const { return best_; }
  const std::vector<Mask>& best_boxes() const { return best_boxes_; }

 private:
  bool fits(Node v, Mask box) const { return (box & ~compat_[v]) == 0; }

  // Nodes that fit no open box and are pairwise incompatible each need a new box.
  std::size_t lower_bound(std::size_t idx, const std::vector<Mask>& boxes) const {
    Mask clique = 0;
    std::size_t extra = 0;
    for (std::size_t i = idx; i < n_; ++i) {
      const Node v = order_[i];
      if (std::any_of(boxes.begin(), boxes.end(), [&](Mask b) { return fits(v, b); })) continue;
      if ((clique & compat_[v]) == 0) {
        clique |= Mask{1} << v;
        ++extra;
      }
    }
    return boxes.size() + extra;
  }

  void search(std::size_t idx, std::vector<Mask>& boxes) {
    if (idx == n_) {
      if (boxes.size() < best_) {
        best_ = boxes.size();
        best_boxes_ = boxes;
      }
      return;
    }
    if (lower_bound(idx, boxes) >= best_) return;
    const Node v = order_[idx];
    const Mask bit = Mask{1} << v;
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      if (!fits(v, boxes[b])) continue;
      boxes[b] |= bit;
      search(idx + 1, boxes);
      boxes[b] &= ~bit;
    }
    if (boxes.size() + 1 < best_) {
      boxes.push_back(bit);
      search(idx + 1, boxes);
      boxes.pop_back();
    }
  }

  std::size_t n_;
  std::vector<Mask> compat_;
  std::vector<Node> order_;
  std::size_t best_ = 0;
  std::vector<Mask> best_boxes_;
};

}  // namespace

OracleResult exact_min_cover(const DistanceMatrix& dm, int impl_size) {
  const std::size_t n = dm.size();
  if (n > kOracleMaxNodes)
    throw Error("exact cover refused: " + std::to_string(n) + " nodes exceeds limit of " +
                std::to_string(kOracleMaxNodes));
  if (impl_size < 0) throw Error("box size must be non-negative");
  OracleResult result;
  result.witness.produced_for = SizeSpec::eval(impl_size + 1);
  if (n == 0) return result;
  BranchAndBound bb(dm, impl_size);
  bb.solve();
  result.optimum = bb.best();
  for (Mask m : bb.best_boxes()) {
    NodeSet box;
    for (Node v = 0; v < n; ++v)
      if (m & (Mask{1} << v)) box.push_back(v);
    result.witness.boxes.push_back(std::move(box));
  }
  std::sort(result.witness.boxes.begin(), result.witness.boxes.end());
  return result;
}

namespace {

Graph from_pairs(std::size_t n, const std::vector<std::pair<Node, Node>>& edges) {
  return Graph(n, edges);
}

std::size_t parse_count(std::string_view text, const std::string& spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
    throw Error("bad graph spec '" + spec + "'");
  return value;
}

}  // namespace

Graph path_graph(std::size_t n) {
  if (n < 1) throw Error("path needs at least one node");
  std::vector<std::pair<Node, Node>> e;
  for (Node i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_pairs(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("cycle needs at least three nodes");
  std::vector<std::pair<Node, Node>> e;
  for (Node i = 0; i < n; ++i) e.emplace_back(i, static_cast<Node>((i + 1) % n));
  return from_pairs(n, e);
}

Graph star_graph(std::size_t n) {
  if (n < 2) throw Error("star needs at least two nodes");
  std::vector<std::pair<Node, Node>> e;
  for (Node i = 1; i < n; ++i) e.emplace_back(0, i);
  return from_pairs(n, e);
}

Graph grid_graph(std::size_t width, std::size_t height) {
  if (width < 1 || height < 1) throw Error("grid sides must be positive");
  std::vector<std::pair<Node, Node>> e;
  auto id = [&](std::size_t x, std::size_t y) { return static_cast<Node>(y * width + x); };
  for (std::size_t y = 0; y < height; ++y)
    for (std::size_t x = 0; x < width; ++x) {
      if (x + 1 < width) e.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < height) e.emplace_back(id(x, y), id(x, y + 1));
    }
  return from_pairs(width * height, e);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error("complete graph needs at least one node");
  std::vector<std::pair<Node, Node>> e;
  for (Node i = 0; i < n; ++i)
    for (Node j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_pairs(n, e);
}

Graph generate(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("bad graph spec '" + spec + "', expected kind:size");
  const std::string kind = spec.substr(0, colon);
  const std::string_view arg = std::string_view(spec).substr(colon + 1);
  if (kind == "grid") {
    const auto x = arg.find('x');
    if (x == std::string_view::npos) throw Error("grid spec needs WxH");
    return grid_graph(parse_count(arg.substr(0, x), spec), parse_count(arg.substr(x + 1), spec));
  }
  const std::size_t n = parse_count(arg, spec);
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "star") return star_graph(n);
  if (kind == "complete") return complete_graph(n);
  throw Error("unknown graph kind '" + kind + "'");
}

}  // namespace boxcover
