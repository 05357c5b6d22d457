#include "zagreb/generators.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/random.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace zagreb;

namespace {

GraphErrorKind parse_error_kind(const std::string& text, std::size_t* line = nullptr) {
  try {
    parse_edge_list(text);
  } catch (const GraphError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return GraphErrorKind::kMalformedLine;
}

// Every 2-colouring of the vertex set, tried exhaustively.
bool bipartite_by_brute_force(const Graph& g) {
  const std::size_t n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (((mask >> e.u) & 1u) == ((mask >> e.v) & 1u)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool has_triangle_by_brute_force(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
  return false;
}

std::vector<LabeledGraph> small_corpus() {
  CorpusSpec spec = default_corpus_spec(11, 400);
  spec.random_max_n = 10;
  for (auto& f : spec.families) f.max_size = std::min<std::size_t>(f.max_size, 8);
  return generate_corpus(spec);
}

}  // namespace

TEST(ParseEdgeList, PathOfThree) {
  Graph g = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(ParseEdgeList, StarOfFour) {
  Graph g = parse_edge_list("0 1\n0 2\n0 3");
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.degree(0), 3u);
  EXPECT_EQ(g, star_graph(4));
}

TEST(ParseEdgeList, DuplicateEdgeNamesLine) {
  std::size_t line = 0;
  EXPECT_EQ(parse_error_kind("0 1\n0 1", &line), GraphErrorKind::kDuplicateEdge);
  EXPECT_EQ(line, 2u);
  EXPECT_EQ(parse_error_kind("0 1\n1 2\n2 1", &line), GraphErrorKind::kDuplicateEdge);
  EXPECT_EQ(line, 3u);
}

TEST(ParseEdgeList, DistinctDiagnostics) {
  std::size_t line = 0;
  EXPECT_EQ(parse_error_kind("0 1\n1 1\n1 2", &line), GraphErrorKind::kSelfLoop);
  EXPECT_EQ(line, 2u);
  EXPECT_EQ(parse_error_kind("0 1\n2 3"), GraphErrorKind::kDisconnected);
  EXPECT_EQ(parse_error_kind("0 1"), GraphErrorKind::kTooFewVertices);
  EXPECT_EQ(parse_error_kind(""), GraphErrorKind::kTooFewVertices);
  EXPECT_EQ(parse_error_kind("0 1\n1 x", &line), GraphErrorKind::kMalformedLine);
  EXPECT_EQ(line, 2u);
  EXPECT_EQ(parse_error_kind("0 1 2\n1 2", &line), GraphErrorKind::kMalformedLine);
  EXPECT_EQ(line, 1u);
  EXPECT_EQ(parse_error_kind("0 -1\n1 2", &line), GraphErrorKind::kMalformedLine);
}

TEST(ParseEdgeList, CommentsAndBlankLines) {
  Graph g = parse_edge_list("# a path\n\n0 1   # first\n\t1 2\n\n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(ParseEdgeList, SparseIdsAreCompacted) {
  Graph g = parse_edge_list("10 7\n7 300\n");
  EXPECT_EQ(g.order(), 3u);
  ASSERT_EQ(g.labels().size(), 3u);
  EXPECT_EQ(g.labels()[0], 7u);
  EXPECT_EQ(g.labels()[1], 10u);
  EXPECT_EQ(g.labels()[2], 300u);
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(SerializeEdgeList, CanonicalForms) {
  EXPECT_EQ(serialize_edge_list(path_graph(3)), "0 1\n1 2");
  EXPECT_EQ(serialize_edge_list(star_graph(4)), "0 1\n0 2\n0 3");
  EXPECT_EQ(serialize_edge_list(cycle_graph(4)), "0 1\n0 3\n1 2\n2 3");
  EXPECT_EQ(serialize_edge_list(parse_edge_list("3 2\n1 2\n0 1\n3 0")), "0 1\n0 3\n1 2\n2 3");
}

TEST(SerializeEdgeList, RoundTripOnCorpus) {
  for (const LabeledGraph& lg : small_corpus()) {
    EXPECT_EQ(parse_edge_list(serialize_edge_list(lg.graph)), lg.graph) << lg.label;
  }
}

TEST(FromEdges, RejectsInvalid) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 1}}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 5}}), GraphError);
  EXPECT_THROW(Graph::from_edges(4, {{0, 1}, {1, 2}}), GraphError);
}

TEST(DegreeProfile, CompleteBipartite23) {
  const Graph g = complete_bipartite_graph(2, 3);
  const DegreeProfile p = degree_profile(g);
  EXPECT_EQ(p.max_degree, 3u);
  EXPECT_EQ(p.min_degree, 2u);
  for (Vertex v = 0; v < g.order(); ++v) {
    EXPECT_EQ(p.mu[v], Rational(p.degree[v] == 3 ? 2 : 3));
  }
  EXPECT_EQ(p.count_by_degree.at(3), 2u);
  EXPECT_EQ(p.count_by_degree.at(2), 3u);
}

TEST(DegreeProfile, Cycle4) {
  const DegreeProfile p = degree_profile(cycle_graph(4));
  EXPECT_TRUE(p.is_regular());
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(p.degree[i], 2u);
    EXPECT_EQ(p.mu[i], Rational(2));
  }
}

TEST(DegreeProfile, Star4) {
  const DegreeProfile p = degree_profile(star_graph(4));
  EXPECT_EQ(p.degree, (std::vector<std::size_t>{3, 1, 1, 1}));
  EXPECT_EQ(p.mu[0], Rational(1));
  EXPECT_EQ(p.mu[1], Rational(3));
  EXPECT_EQ(p.power_sums[2], Integer(30));
}

TEST(DegreeProfile, NonIntegerMu) {
  // Vertex 1 of P4 + pendant: neighbours of degree 1 and 2.
  const DegreeProfile p = degree_profile(path_graph(4));
  EXPECT_EQ(p.mu[1], Rational(3, 2));
}

TEST(DegreeProfile, HandshakeAndMuIdentityOnCorpus) {
  for (const LabeledGraph& lg : small_corpus()) {
    const DegreeProfile p = degree_profile(lg.graph);
    EXPECT_EQ(p.power_sums[0], Integer(2 * lg.graph.size())) << lg.label;
    std::size_t from_counts = 0;
    for (auto [d, c] : p.count_by_degree) from_counts += d * c;
    EXPECT_EQ(from_counts, 2 * lg.graph.size());
    Rational weighted = 0;
    for (std::size_t i = 0; i < p.degree.size(); ++i) {
      weighted += Rational(Integer(p.degree[i])) * p.mu[i];
      EXPECT_GE(p.degree[i], p.min_degree);
      EXPECT_LE(p.degree[i], p.max_degree);
    }
    EXPECT_EQ(weighted, Rational(p.power_sums[1])) << lg.label;
  }
}

TEST(IsBipartite, Examples) {
  auto k23 = is_bipartite(complete_bipartite_graph(2, 3));
  ASSERT_TRUE(k23);
  std::vector<std::size_t> sizes{k23->first.size(), k23->second.size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 3}));

  EXPECT_FALSE(is_bipartite(cycle_graph(5)));

  auto s4 = is_bipartite(star_graph(4));
  ASSERT_TRUE(s4);
  EXPECT_EQ(s4->first, std::vector<Vertex>{0});
  EXPECT_EQ(s4->second, (std::vector<Vertex>{1, 2, 3}));
}

TEST(IsBipartite, AgreesWithBruteForceUpToTen) {
  std::vector<Graph> graphs = all_connected_graphs(5);
  Rng rng(2024);
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = rng.between(3, 10);
    const std::size_t m = rng.between(n - 1, std::min<std::size_t>(n * (n - 1) / 2, n + 4));
    graphs.push_back(random_connected(n, m, rng.next()));
  }
  for (std::size_t n = 3; n <= 10; ++n) graphs.push_back(cycle_graph(n));
  for (const Graph& g : graphs) {
    const auto verdict = is_bipartite(g);
    ASSERT_EQ(verdict.has_value(), bipartite_by_brute_force(g)) << serialize_edge_list(g);
    if (verdict) {
      EXPECT_EQ(verdict->first.size() + verdict->second.size(), g.order());
      std::vector<int> side(g.order(), -1);
      for (Vertex v : verdict->first) side[v] = 0;
      for (Vertex v : verdict->second) side[v] = 1;
      for (const Edge& e : g.edges()) EXPECT_NE(side[e.u], side[e.v]);
    }
  }
}

TEST(IsTriangleFree, Examples) {
  EXPECT_FALSE(is_triangle_free(complete_graph(3)));
  EXPECT_TRUE(is_triangle_free(cycle_graph(4)));
  EXPECT_FALSE(is_triangle_free(wheel_graph(5)));
}

TEST(IsTriangleFree, AgreesWithTripleLoop) {
  Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = rng.between(3, 12);
    const std::size_t m = rng.between(n - 1, n * (n - 1) / 2);
    const Graph g = random_connected(n, m, rng.next());
    EXPECT_EQ(is_triangle_free(g), !has_triangle_by_brute_force(g)) << serialize_edge_list(g);
  }
}

TEST(VertexEdgeSumIdentity, Examples) {
  const std::vector<Rational> ones(4, Rational(1));
  EXPECT_EQ(vertex_edge_sum_identity(cycle_graph(4), ones), std::make_pair(Rational(4), Rational(4)));

  const std::vector<Rational> star_degrees{3, 1, 1, 1};
  EXPECT_EQ(vertex_edge_sum_identity(star_graph(4), star_degrees), std::make_pair(Rational(6), Rational(6)));

  const Graph k23 = complete_bipartite_graph(2, 3);
  std::vector<Rational> cubes;
  for (Vertex v = 0; v < k23.order(); ++v) cubes.emplace_back(Integer(k23.degree(v) * k23.degree(v) * k23.degree(v)));
  const auto [vs, es] = vertex_edge_sum_identity(k23, cubes);
  EXPECT_EQ(vs, Rational(78));
  EXPECT_EQ(es, Rational(78));
  Integer edge_form = 0;
  for (const Edge& e : k23.edges()) {
    edge_form += Integer(k23.degree(e.u) * k23.degree(e.u) + k23.degree(e.v) * k23.degree(e.v));
  }
  EXPECT_EQ(es, Rational(edge_form));
}

TEST(VertexEdgeSumIdentity, Errors) {
  const std::vector<Rational> three(3, Rational(1));
  EXPECT_THROW(vertex_edge_sum_identity(cycle_graph(4), three), std::invalid_argument);
  const std::vector<Rational> negative{1, -1, 1, 1};
  EXPECT_THROW(vertex_edge_sum_identity(cycle_graph(4), negative), std::invalid_argument);
}

TEST(VertexEdgeSumIdentity, ThousandRandomRationalWeightings) {
  Rng rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = rng.between(3, 16);
    const Graph g = random_connected(n, rng.between(n - 1, n * (n - 1) / 2), rng.next());
    std::vector<Rational> x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(Integer(rng.below(1000)), Integer(rng.between(1, 97)));
    const auto [vs, es] = vertex_edge_sum_identity(g, x);
    ASSERT_EQ(vs, es) << "trial " << trial;
    ASSERT_EQ(vs, std::accumulate(x.begin(), x.end(), Rational(0)));
  }
}
