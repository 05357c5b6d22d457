#include "zagreb/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

namespace zagreb {

namespace {

std::string line_prefix(std::size_t line) {
  return line == 0 ? std::string() : "line " + std::to_string(line) + ": ";
}

bool connected(const std::vector<std::vector<Vertex>>& adjacency) {
  if (adjacency.empty()) return true;
  std::vector<bool> seen(adjacency.size(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adjacency.size();
}

// Shared validation for both construction paths. `lines` maps each edge to its
// source line (empty when built programmatically).
Graph build(std::size_t n, std::vector<Edge> raw, const std::vector<std::size_t>& lines,
            std::vector<std::uint64_t> labels,
            Graph (*make)(std::vector<std::vector<Vertex>>, std::vector<Edge>,
                          std::vector<std::uint64_t>)) {
  auto line_of = [&](std::size_t i) { return lines.empty() ? 0 : lines[i]; };
  std::set<Edge> seen;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Edge e = raw[i];
    if (e.u >= n || e.v >= n) {
      throw GraphError(GraphErrorKind::kVertexOutOfRange, line_of(i),
                       line_prefix(line_of(i)) + "vertex id out of range");
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrorKind::kSelfLoop, line_of(i),
                       line_prefix(line_of(i)) + "self-loop on vertex " +
                           std::to_string(labels.empty() ? e.u : labels[e.u]));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert(e).second) {
      throw GraphError(GraphErrorKind::kDuplicateEdge, line_of(i),
                       line_prefix(line_of(i)) + "duplicate edge");
    }
    edges.push_back(e);
  }
  if (n < 3) {
    throw GraphError(GraphErrorKind::kTooFewVertices, 0,
                     "graph has " + std::to_string(n) + " vertices; at least 3 required");
  }
  std::vector<std::vector<Vertex>> adjacency(n);
  for (const Edge& e : edges) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  if (!connected(adjacency)) {
    throw GraphError(GraphErrorKind::kDisconnected, 0, "graph is disconnected");
  }
  std::sort(edges.begin(), edges.end());
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  }
  return make(std::move(adjacency), std::move(edges), std::move(labels));
}

}  // namespace

Graph::Graph(std::vector<std::vector<Vertex>> adjacency, std::vector<Edge> edges,
             std::vector<std::uint64_t> labels)
    : adjacency_(std::move(adjacency)), edges_(std::move(edges)), labels_(std::move(labels)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  return build(n, std::vector<Edge>(edges.begin(), edges.end()), {}, {},
               [](std::vector<std::vector<Vertex>> a, std::vector<Edge> e,
                  std::vector<std::uint64_t> l) { return Graph(std::move(a), std::move(e), std::move(l)); });
}

Graph Graph::from_edges(std::size_t n,
                        std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return from_edges(n, list);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::uint64_t ids[2];
    int found = 0;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; };
    while (true) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      std::string_view token = line.substr(i, j - i);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (found == 2 || ec != std::errc() || ptr != token.data() + token.size()) {
        throw GraphError(GraphErrorKind::kMalformedLine, line_no,
                         line_prefix(line_no) + "expected two nonnegative integers, got '" +
                             std::string(line) + "'");
      }
      ids[found++] = value;
      i = j;
    }
    if (found == 0) continue;
    if (found != 2) {
      throw GraphError(GraphErrorKind::kMalformedLine, line_no,
                       line_prefix(line_no) + "expected two nonnegative integers, got '" +
                           std::string(line) + "'");
    }
    pairs.emplace_back(ids[0], ids[1]);
    lines.push_back(line_no);
  }

  std::vector<std::uint64_t> labels;
  for (auto [a, b] : pairs) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto index_of = [&](std::uint64_t id) {
    return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), id) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({index_of(a), index_of(b)});
  const std::size_t n = labels.size();
  return build(n, std::move(edges), lines, std::move(labels),
               [](std::vector<std::vector<Vertex>> a, std::vector<Edge> e,
                  std::vector<std::uint64_t> l) { return Graph(std::move(a), std::move(e), std::move(l)); });
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out << '\n';
    first = false;
    out << e.u << ' ' << e.v;
  }
  return out.str();
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  const std::size_t n = g.order();
  p.degree.resize(n);
  p.neighbor_degree_sum.resize(n);
  p.mu.resize(n);
  p.power_sums.fill(0);
  p.max_degree = 0;
  p.min_degree = n;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    p.degree[v] = d;
    p.max_degree = std::max(p.max_degree, d);
    p.min_degree = std::min(p.min_degree, d);
    ++p.count_by_degree[d];
    Integer power = 1;
    for (auto& sum : p.power_sums) {
      power *= d;
      sum += power;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    Integer s = 0;
    for (Vertex w : g.neighbors(v)) s += p.degree[w];
    p.neighbor_degree_sum[v] = s;
    p.mu[v] = Rational(s, Integer(p.degree[v]));
  }
  return p;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  std::deque<Vertex> queue{0};
  side[0] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

bool is_triangle_free(const Graph& g) {
  // Sorted adjacency: intersect the neighbour lists of each edge's endpoints.
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) ++i; else ++j;
    }
  }
  return true;
}

std::pair<Rational, Rational> vertex_edge_sum_identity(const Graph& g,
                                                       std::span<const Rational> weights) {
  if (weights.size() != g.order()) {
    throw std::invalid_argument("expected " + std::to_string(g.order()) + " weights, got " +
                                std::to_string(weights.size()));
  }
  Rational vertex_sum = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    vertex_sum += w;
  }
  Rational edge_sum = 0;
  for (const Edge& e : g.edges()) {
    edge_sum += weights[e.u] / Integer(g.degree(e.u)) + weights[e.v] / Integer(g.degree(e.v));
  }
  return {vertex_sum, edge_sum};
}

}  // namespace zagreb
