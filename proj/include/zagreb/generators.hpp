#pragma once

#include "zagreb/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zagreb {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family {
  kCycle,                 // C_n, n >= 3
  kPath,                  // P_n, n >= 3
  kComplete,              // K_n, n >= 3
  kStar,                  // S_n: one centre and n-1 leaves, n >= 3
  kCompleteBipartite,     // K_{p,q}, p,q >= 1, p+q >= 3
  kWheel,                 // W_n: hub joined to a (n-1)-cycle, n >= 5
  kCompleteSplit,         // CS(n,p): p-clique joined to an (n-p)-independent set, 1 <= p < n
  kCompleteMultipartite,  // K_{a1,...,ak}, k >= 2
  kRegularRandom,         // connected R-regular graph on n vertices, seeded
  kSubdividedComplete,    // K_n with every edge subdivided once, n >= 3
  kDendrimer,             // weakly irregular tree with degree set {1..D}
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t p, std::size_t q);
Graph wheel_graph(std::size_t n);
Graph complete_split_graph(std::size_t n, std::size_t p);
Graph complete_multipartite_graph(std::span<const std::size_t> parts);
Graph subdivided_complete_graph(std::size_t n);
/// Connected R-regular graph: a circulant start scrambled by seeded
/// simplicity-preserving double edge swaps.
Graph random_regular_graph(std::size_t n, std::size_t degree, std::uint64_t seed);

/// Tree rooted at a vertex of degree `max_degree` with `max_degree` children of
/// degree max_degree-1; every other vertex of degree j > 1 has j-1 children of
/// degree j-1. Throws GeneratorError for max_degree < 2.
Graph dendrimer(std::size_t max_degree);

/// Dispatches on the family. `params` are the family's size arguments in the
/// order listed on Family; kCompleteMultipartite takes the part sizes;
/// kRegularRandom takes (n, R) and uses `seed`.
Graph make_family(Family family, std::span<const std::size_t> params, std::uint64_t seed = 0);

/// Random spanning tree from a uniform Pruefer sequence, plus m-(n-1) extra
/// edges drawn uniformly from the remaining vertex pairs. Deterministic in seed.
Graph random_connected(std::size_t n, std::size_t m, std::uint64_t seed);

/// Every connected graph on vertex set 0..n-1 (labelled, not up to
/// isomorphism). Only practical for n <= 6.
std::vector<Graph> all_connected_graphs(std::size_t n);

struct LabeledGraph {
  std::string label;
  Graph graph;
};

struct FamilyRequest {
  Family family;
  // Inclusive vertex-count range; for kDendrimer the range is the maximum degree.
  std::size_t min_size = 3;
  std::size_t max_size = 3;
};

struct CorpusSpec {
  std::vector<FamilyRequest> families;
  std::size_t random_count = 0;
  std::size_t random_min_n = 3;
  std::size_t random_max_n = 24;
  std::uint64_t seed = 0;
};

/// Families in request order (members ordered by size, then parameters), then
/// the random graphs. Identical specs give identical streams.
std::vector<LabeledGraph> generate_corpus(const CorpusSpec& spec);

/// Every family at small parameters plus `random_count` random connected
/// graphs with 3 <= n <= 24.
CorpusSpec default_corpus_spec(std::uint64_t seed, std::size_t random_count = 5000);

}  // namespace zagreb
