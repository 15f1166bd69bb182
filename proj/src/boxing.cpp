#include "boxcover/boxing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace boxcover {

SizeSpec equivalent_eval_size(SizeSpec s) {
  if (s.value < 1) throw Error("box size must be positive");
  switch (s.kind) {
    case SizeKind::Radius: return SizeSpec::eval(2 * s.value + 1);
    case SizeKind::ImplDiameter: return SizeSpec::eval(s.value + 1);
    case SizeKind::EvalDiameter: return s;
  }
  return s;
}

SizeSpec equivalent_impl_size(SizeSpec s) {
  auto e = equivalent_eval_size(s);
  if (e.value < 2) throw Error("eval size 1 has no implementation-convention equivalent");
  return SizeSpec::impl(e.value - 1);
}

SizeSpec equivalent_radius(SizeSpec s) {
  auto e = equivalent_eval_size(s);
  if (e.value % 2 == 0)
    throw Error("eval size " + std::to_string(e.value) + " has no radius equivalent");
  if (e.value < 3) throw Error("eval size 1 has no radius equivalent");
  return SizeSpec::radius((e.value - 1) / 2);
}

std::string to_string(SizeKind k) {
  switch (k) {
    case SizeKind::Radius: return "radius";
    case SizeKind::ImplDiameter: return "impl_diameter";
    case SizeKind::EvalDiameter: return "eval_diameter";
  }
  return "?";
}

std::string CoverReport::describe() const {
  std::ostringstream os;
  auto list = [&](const char* what, const auto& v) {
    if (v.empty()) return;
    os << what << ':';
    for (auto x : v) os << ' ' << x;
    os << "; ";
  };
  list("uncovered nodes", uncovered);
  list("multiply covered nodes", multiply_covered);
  list("empty boxes", empty_boxes);
  list("out-of-range boxes", out_of_range_boxes);
  list("diameter violations (box index)", diameter_violations);
  list("center violations (box index)", center_violations);
  auto s = os.str();
  return s.empty() ? "valid" : s;
}

int box_diameter(const DistanceMatrix& dm, std::span<const Node> box) {
  int worst = 0;
  for (std::size_t i = 0; i < box.size(); ++i)
    for (std::size_t j = i + 1; j < box.size(); ++j)
      worst = std::max<int>(worst, dm(box[i], box[j]));
  return worst;
}

bool box_is_connected(const Graph& g, std::span<const Node> box) {
  if (box.empty()) return true;
  NodeSet sorted(box.begin(), box.end());
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](Node v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
  std::vector<bool> seen(g.size(), false);
  NodeSet stack{sorted.front()};
  seen[sorted.front()] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    for (Node w : g.neighbors(v))
      if (!seen[w] && member(w)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == sorted.size();
}

CoverReport validate_cover(const Cover& c, const DistanceMatrix& dm) {
  CoverReport report;
  const std::size_t n = dm.size();
  const int limit = equivalent_eval_size(c.produced_for).value - 1;
  std::vector<int> hits(n, 0);
  for (std::size_t b = 0; b < c.boxes.size(); ++b) {
    const auto& box = c.boxes[b];
    if (box.empty()) report.empty_boxes.push_back(b);
    if (std::any_of(box.begin(), box.end(), [&](Node v) { return v >= n; })) {
      report.out_of_range_boxes.push_back(b);
      continue;
    }
    for (Node v : box) ++hits[v];
    if (box_diameter(dm, box) > limit) report.diameter_violations.push_back(b);
  }
  for (Node v = 0; v < n; ++v) {
    if (hits[v] == 0) report.uncovered.push_back(v);
    if (c.mode == CoverMode::Partition && hits[v] > 1) report.multiply_covered.push_back(v);
  }
  if (c.centers) {
    const auto e = equivalent_eval_size(c.produced_for).value;
    const int r = (e - 1) / 2;
    const auto& centers = *c.centers;
    for (std::size_t b = 0; b < c.boxes.size(); ++b) {
      if (b >= centers.size() || centers[b] >= n) {
        report.center_violations.push_back(b);
        continue;
      }
      for (Node v : c.boxes[b])
        if (v < n && dm(v, centers[b]) > r) {
          report.center_violations.push_back(b);
          break;
        }
    }
  }
  return report;
}

namespace {

Cover assign_to_centers(std::span<const Node> centers, const Graph& g, const DistanceMatrix& dm,
                        int radius, Rng* rng) {
  const std::size_t n = dm.size();
  constexpr int far = 1 << 30;
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  std::vector<int> cdist(n, far);
  std::vector<std::size_t> box_of(n, unassigned);
  for (std::size_t b = 0; b < centers.size(); ++b) {
    const Node c = centers[b];
    if (box_of[c] != unassigned) throw Error("duplicate center " + std::to_string(c));
    box_of[c] = b;
    for (Node v = 0; v < n; ++v) cdist[v] = std::min<int>(cdist[v], dm(v, c));
  }
  NodeSet order;
  for (Node v = 0; v < n; ++v) {
    if (cdist[v] > radius) throw Error("node " + std::to_string(v) + " has no center within radius");
    if (cdist[v] > 0) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Node a, Node b) { return cdist[a] < cdist[b]; });

  NodeSet eligible;
  for (Node v : order) {
    eligible.clear();
    for (Node w : g.neighbors(v))
      if (cdist[w] < cdist[v]) eligible.push_back(w);
    // a shortest path to the nearest center always passes a closer neighbour
    const Node m = rng ? rng->pick(eligible) : eligible.front();
    box_of[v] = box_of[m];
  }

  Cover cover;
  cover.mode = CoverMode::Partition;
  cover.produced_for = SizeSpec::radius(radius);
  cover.boxes.resize(centers.size());
  for (Node v = 0; v < n; ++v) cover.boxes[box_of[v]].push_back(v);
  cover.centers = NodeSet(centers.begin(), centers.end());
  return cover;
}

}  // namespace

Cover build_boxes_from_centers(std::span<const Node> centers, const Graph& g,
                               const DistanceMatrix& dm, int radius, Rng& rng) {
  return assign_to_centers(centers, g, dm, radius, &rng);
}

Cover build_boxes_from_centers(std::span<const Node> centers, const Graph& g,
                               const DistanceMatrix& dm, int radius) {
  return assign_to_centers(centers, g, dm, radius, nullptr);
}

std::string cover_to_json(const Cover& c, const Graph& g) {
  const bool numeric = std::all_of(g.labels().begin(), g.labels().end(), [](const std::string& s) {
    if (s.empty() || s.size() > 18) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    return i < s.size() && std::all_of(s.begin() + i, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  });
  auto label = [&](Node v) -> nlohmann::json {
    if (numeric) return std::stoll(g.label(v));
    return g.label(v);
  };
  nlohmann::json j;
  j["mode"] = c.mode == CoverMode::Partition ? "partition" : "overlapping";
  j["eval_size"] = equivalent_eval_size(c.produced_for).value;
  j["boxes"] = nlohmann::json::array();
  for (const auto& box : c.boxes) {
    auto arr = nlohmann::json::array();
    for (Node v : box) arr.push_back(label(v));
    j["boxes"].push_back(std::move(arr));
  }
  if (c.centers) {
    auto arr = nlohmann::json::array();
    for (Node v : *c.centers) arr.push_back(label(v));
    j["centers"] = std::move(arr);
  }
  return j.dump();
}

}  // namespace boxcover
