#pragma once

#include "zagreb/numeric.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zagreb {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind {
  kMalformedLine,
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kTooFewVertices,
  kDisconnected,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, std::size_t line, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  GraphErrorKind kind() const { return kind_; }
  // 1-based source line, 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  GraphErrorKind kind_;
  std::size_t line_;
};

// Simple connected undirected graph with n >= 3. Immutable once built.
class Graph {
 public:
  // Validates simplicity, connectivity and n >= 3; throws GraphError.
  // Edge endpoints may be given in either order.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n,
                          std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  // Canonical edges (u < v), sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }
  bool adjacent(Vertex a, Vertex b) const;

  // Identifier each vertex carried in its source file (defaults to 0..n-1).
  std::span<const std::uint64_t> labels() const { return labels_; }

  bool operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_;
  }

 private:
  Graph(std::vector<std::vector<Vertex>> adjacency, std::vector<Edge> edges,
        std::vector<std::uint64_t> labels);

  friend Graph parse_edge_list(std::string_view text);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> labels_;
};

/// Reads `u v` lines (`#` comments, blank lines skipped). Ids are arbitrary
/// nonnegative integers, compacted to 0..n-1 in ascending id order.
Graph parse_edge_list(std::string_view text);

/// Canonical form: sorted edges, one `u v` pair per line, no trailing newline.
std::string serialize_edge_list(const Graph& g);

struct DegreeProfile {
  std::vector<std::size_t> degree;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::map<std::size_t, std::size_t> count_by_degree;
  // Sum of neighbour degrees, i.e. d_i * mu_i; always an integer.
  std::vector<Integer> neighbor_degree_sum;
  // Average neighbour degree.
  std::vector<Rational> mu;
  // power_sums[p-1] = sum of d_i^p for p = 1..5.
  std::array<Integer, 5> power_sums;

  bool is_regular() const { return max_degree == min_degree; }
};

DegreeProfile degree_profile(const Graph& g);

struct Bipartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

/// Two-colours the graph by BFS from vertex 0; nullopt when an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

bool is_triangle_free(const Graph& g);

/// Returns (sum_i x_i, sum_{(i,j) in E} x_i/d_i + x_j/d_j). The two agree for
/// every graph without isolated vertices.
std::pair<Rational, Rational> vertex_edge_sum_identity(const Graph& g,
                                                       std::span<const Rational> weights);

}  // namespace zagreb
