#pragma once

#include "zagreb/graph.hpp"
#include "zagreb/numeric.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zagreb {

class FullereneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cubic plane graph: rotation[v] lists the neighbours of v in clockwise order.
struct PlanarEmbedding {
  std::vector<std::array<Vertex, 3>> rotation;

  std::size_t order() const { return rotation.size(); }
};

/// Reads `v: a b c` lines (`#` comments, blank lines skipped) and validates the
/// result as a fullerene: cubic, symmetric rotation, k even, k >= 20, k != 22,
/// faces of size 5 or 6 only, twelve pentagons, Euler's formula.
PlanarEmbedding parse_embedding(std::string_view text);

/// Same validation for an embedding built in memory.
void validate_fullerene(const PlanarEmbedding& e);

std::string serialize_embedding(const PlanarEmbedding& e);

/// Face boundary walks. Each directed edge is used by exactly one face.
/// Throws FullereneError when the rotation is not symmetric.
std::vector<std::vector<Vertex>> trace_faces(const PlanarEmbedding& e);

/// One vertex per face, one edge per shared primal edge.
/// Throws FullereneError if two faces share more than one edge.
Graph dual_graph(const PlanarEmbedding& e);

/// Rebuilds the cubic primal from a plane triangulation (such as a decoded
/// spiral). The planar embedding of the triangulation is found with the
/// Boyer-Myrvold test. Throws FullereneError if the graph is not a planar
/// triangulation.
PlanarEmbedding primal_from_dual(const Graph& dual);

struct SpiralDecode {
  std::optional<Graph> dual;
  std::string failure;  // why the spiral did not close, empty on success

  bool ok() const { return dual.has_value(); }
};

/// Winds a face spiral (face sizes 5 or 6, in spiral order) into the dual
/// triangulation. Throws FullereneError when the sequence is not a fullerene
/// face sequence (sizes outside {5,6}, pentagon count other than 12, length
/// giving k = 22 or an odd length); a spiral that does not close is reported
/// through SpiralDecode::failure.
SpiralDecode decode_spiral(std::span<const int> face_sizes);

/// Face sizes for a spiral given by 1-based pentagon positions.
std::vector<int> spiral_face_sizes(std::size_t k, std::span<const std::size_t> pentagons);

/// Number of edges joining two degree-5 vertices of a dual.
/// Throws FullereneError on a degree outside {5, 6}.
std::size_t pentagon_adjacency(const Graph& dual);

struct FullereneDualReport {
  std::size_t k = 0;
  std::size_t np = 0;
  Integer irr;
  Integer irld;
  Rational irmd;
  bool eq16ok = false;  // Irr = IRL = 60 - 2 np
  bool eq17ok = false;  // IRM = 54k + np - 360 - 54k^3/(k+4)^2
  bool eq18ok = false;  // IRM = F/2 - 4m^3/n^2 - IRL/2
};

/// Closed forms for a fullerene dual with k primal vertices.
Integer dual_irl_closed_form(std::size_t np);
Rational dual_irm_closed_form(std::size_t k, std::size_t np);

/// Throws FullereneError if the dual does not have k/2 + 2 vertices, 3k/2
/// edges and twelve degree-5 vertices with the rest of degree 6.
FullereneDualReport fullerene_report(const Graph& dual, std::size_t k);

struct SpiralEntry {
  std::string label;
  std::size_t k = 0;
  std::array<std::size_t, 12> pentagons{};
};

/// `label k p1 ... p12`. Throws FullereneError.
SpiralEntry parse_spiral_line(std::string_view line);

/// Whole file; `#` comments and blank lines skipped. Errors carry "line N: ".
std::vector<SpiralEntry> parse_spiral_file(std::string_view text);

struct EnergyRow {
  std::string label;
  double energy = 0.0;
};

/// `label,energy` header then one row per isomer. Throws FullereneError.
std::vector<EnergyRow> parse_energy_csv(std::string_view text);
std::string serialize_energy_csv(std::span<const EnergyRow> rows);

class CorrelationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CorrelationPair {
  std::string label;
  double index = 0.0;
  double energy = 0.0;
};

struct CorrelationReport {
  std::vector<CorrelationPair> pairs;  // sorted by label
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::string> unmatched;  // labels present on one side only, sorted
};

/// Ordinary least squares of energy on index over the labels present in both
/// lists. Throws CorrelationError on duplicate labels, fewer than 3 matches,
/// or zero variance in either coordinate.
CorrelationReport correlate(std::span<const std::pair<std::string, double>> values,
                            std::span<const EnergyRow> energies);

}  // namespace zagreb
