#pragma once

#include "zagreb/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zagreb {

// Membership in the structural families used by the inequality registry.
// Optional fields carry the witness parameters when membership holds.
struct GraphClassification {
  std::optional<std::size_t> regular;                           // R
  std::optional<std::pair<std::size_t, std::size_t>> bidegreed;  // (max, min)
  // Bipartite, bidegreed, every edge joins a max-degree and a min-degree vertex.
  bool semiregular = false;
  // Non-regular, every edge has the same endpoint degree difference epsilon.
  std::optional<std::size_t> weakly_semiregular;
  // Non-regular, every edge degree difference at most 1.
  bool nearly_regular = false;
  // Every edge degree difference exactly 1.
  bool weakly_irregular = false;
  // Non-regular, all non-adjacent pairs have equal degrees.
  bool well_stabilized = false;
  std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite;  // p <= q
  std::optional<std::size_t> star;                                        // n
  std::optional<std::pair<std::size_t, std::size_t>> complete_split;      // (n, p)
  bool complete = false;
  bool triangle = false;  // isomorphic to K3
  bool bipartite = false;
  bool triangle_free = false;
  std::size_t distinct_degrees = 0;
};

GraphClassification classify(const Graph& g);

/// Tags such as "regular(R=3)" or "weakly_semiregular(eps=2)", in a fixed order.
std::vector<std::string> class_tags(const GraphClassification& c);

struct ImplicationVerdict {
  std::string name;
  bool premise = false;
  bool holds = true;  // vacuously true when the premise is false
};

/// Checks the implications between families (weakly irregular implies
/// weakly semiregular with eps 1 and nearly regular; semiregular implies
/// bidegreed and bipartite; weakly semiregular implies bipartite; regular
/// excludes every non-regular family).
std::vector<ImplicationVerdict> assert_taxonomy_implications(const Graph& g);

}  // namespace zagreb
