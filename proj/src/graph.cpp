#include "boxcover/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace boxcover {

Graph::Graph(std::size_t n, std::span<const std::pair<Node, Node>> edges,
             std::vector<std::string> labels)
    : adjacency_(n), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != n) throw Error("label count does not match node count");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error("edge endpoint out of range");
    if (u == v) continue;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    edge_count_ += adj.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(Node u, Node v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<Node, Node>> Graph::edges() const {
  std::vector<std::pair<Node, Node>> out;
  out.reserve(edge_count_);
  for (Node u = 0; u < size(); ++u)
    for (Node v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph load_edge_list(std::istream& in) {
  std::unordered_map<std::string, Node> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<Node, Node>> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<Node>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string a, b;
    if (!(tokens >> a >> b)) throw ParseError(lineno, "expected two endpoints");
    Node u = intern(a);
    Node v = intern(b);
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw ParseError(lineno, "edge list is empty");
  const std::size_t n = labels.size();
  return Graph(n, edges, std::move(labels));
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::vector<NodeSet> connected_components(const Graph& g) {
  std::vector<bool> seen(g.size(), false);
  std::vector<NodeSet> components;
  for (Node s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    NodeSet comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Node w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

Graph induced_subgraph(const Graph& g, std::span<const Node> nodes) {
  constexpr Node absent = std::numeric_limits<Node>::max();
  std::vector<Node> remap(g.size(), absent);
  std::vector<std::string> labels;
  for (Node i = 0; i < nodes.size(); ++i) {
    remap[nodes[i]] = i;
    labels.push_back(g.label(nodes[i]));
  }
  std::vector<std::pair<Node, Node>> edges;
  for (auto [u, v] : g.edges())
    if (remap[u] != absent && remap[v] != absent) edges.emplace_back(remap[u], remap[v]);
  const std::size_t n = nodes.size();
  return Graph(n, edges, std::move(labels));
}

namespace {

// Integer labels compare numerically and sort before non-integer ones.
bool label_less(const std::string& a, const std::string& b) {
  auto integral = [](const std::string& s) {
    return !s.empty() && s.size() < 19 &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const bool ia = integral(a), ib = integral(b);
  if (ia && ib) return std::stoll(a) < std::stoll(b);
  if (ia != ib) return ia;
  return a < b;
}

}  // namespace

Graph largest_component(const Graph& g) {
  auto components = connected_components(g);
  if (components.size() <= 1) return g;
  auto min_label = [&](const NodeSet& c) {
    const std::string* best = &g.label(c.front());
    for (Node v : c)
      if (label_less(g.label(v), *best)) best = &g.label(v);
    return *best;
  };
  const NodeSet* best = &components.front();
  for (const auto& c : components)
    if (c.size() > best->size() || (c.size() == best->size() && label_less(min_label(c), min_label(*best))))
      best = &c;
  return induced_subgraph(g, *best);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.size();
  constexpr auto unreached = std::numeric_limits<std::uint16_t>::max();
  DistanceMatrix::Matrix d = DistanceMatrix::Matrix::Constant(n, n, unreached);
  std::vector<Node> queue(n);
  for (Node s = 0; s < n; ++s) {
    auto col = d.col(s);
    col(s) = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Node v = queue[head++];
      for (Node w : g.neighbors(v))
        if (col(w) == unreached) {
          col(w) = static_cast<std::uint16_t>(col(v) + 1);
          queue[tail++] = w;
        }
    }
    if (tail != n) throw Error("graph is disconnected; take the largest component first");
  }
  return DistanceMatrix(std::move(d));
}

NodeSet ball(const DistanceMatrix& dm, Node c, int r) {
  NodeSet out;
  const auto col = dm.matrix().col(c);
  for (Node v = 0; v < dm.size(); ++v)
    if (col(v) <= r) out.push_back(v);
  return out;
}

}  // namespace boxcover
