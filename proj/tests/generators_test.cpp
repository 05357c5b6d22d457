#include "zagreb/classify.hpp"
#include "zagreb/generators.hpp"
#include "zagreb/invariants.hpp"
#include "zagreb/random.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace zagreb;

namespace {

std::multiset<std::size_t> degrees(const Graph& g) {
  std::multiset<std::size_t> out;
  for (Vertex v = 0; v < g.order(); ++v) out.insert(g.degree(v));
  return out;
}

// Vertices in the subtree below a vertex that must reach degree j.
std::size_t subtree(std::size_t j) { return j <= 1 ? 1 : 1 + (j - 1) * subtree(j - 1); }

}  // namespace

TEST(MakeFamily, Examples) {
  const std::vector<std::size_t> k23{2, 3};
  const Graph k = make_family(Family::kCompleteBipartite, k23);
  EXPECT_EQ(k.order(), 5u);
  EXPECT_EQ(k.size(), 6u);

  const std::vector<std::size_t> w5{5};
  const Graph w = make_family(Family::kWheel, w5);
  EXPECT_EQ(w.order(), 5u);
  EXPECT_EQ(w.size(), 8u);
  EXPECT_EQ(degrees(w), (std::multiset<std::size_t>{4, 3, 3, 3, 3}));

  const std::vector<std::size_t> cs42{4, 2};
  const Graph cs = make_family(Family::kCompleteSplit, cs42);
  EXPECT_EQ(cs.size(), 5u);
  EXPECT_EQ(degrees(cs), (std::multiset<std::size_t>{3, 3, 2, 2}));
  EXPECT_FALSE(cs.adjacent(2, 3));
}

TEST(MakeFamily, OutOfRange) {
  EXPECT_THROW(wheel_graph(4), GeneratorError);
  EXPECT_THROW(complete_split_graph(5, 5), GeneratorError);
  EXPECT_THROW(complete_split_graph(5, 0), GeneratorError);
  EXPECT_THROW(cycle_graph(2), GeneratorError);
  EXPECT_THROW(complete_bipartite_graph(1, 1), GeneratorError);
  EXPECT_THROW(random_regular_graph(7, 3, 1), GeneratorError);
  EXPECT_THROW(dendrimer(1), GeneratorError);
  const std::vector<std::size_t> one{5};
  EXPECT_THROW(make_family(Family::kCompleteBipartite, one), GeneratorError);
}

TEST(MakeFamily, Names) {
  for (Family f : {Family::kCycle, Family::kPath, Family::kComplete, Family::kStar, Family::kCompleteBipartite,
                   Family::kWheel, Family::kCompleteSplit, Family::kCompleteMultipartite, Family::kRegularRandom,
                   Family::kSubdividedComplete, Family::kDendrimer}) {
    EXPECT_EQ(family_from_name(family_name(f)), f);
  }
  EXPECT_FALSE(family_from_name("petersen"));
}

TEST(RandomRegular, IsRegularConnectedAndSeeded) {
  for (std::size_t n = 6; n <= 20; ++n) {
    for (std::size_t r = 3; r <= 6 && r < n; ++r) {
      if (n * r % 2) continue;
      const Graph g = random_regular_graph(n, r, n * 7 + r);
      EXPECT_EQ(g.size(), n * r / 2);
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(g.degree(v), r);
      EXPECT_EQ(g, random_regular_graph(n, r, n * 7 + r));
    }
  }
}

TEST(Dendrimer, SmallCases) {
  EXPECT_EQ(degrees(dendrimer(2)), degrees(path_graph(3)));
  const Graph t3 = dendrimer(3);
  EXPECT_EQ(t3.order(), 7u);
  EXPECT_EQ(degrees(t3), (std::multiset<std::size_t>{3, 2, 2, 2, 1, 1, 1}));
  const Graph t4 = dendrimer(4);
  EXPECT_EQ(t4.order(), 21u);
  const InvariantReport r = invariant_report(t4);
  EXPECT_EQ(r.irl, 20);
  EXPECT_EQ(r.irr, 20);
  EXPECT_EQ(r.m, 20u);
  EXPECT_TRUE(classify(t4).weakly_irregular);
}

TEST(Dendrimer, CountsAndDegreeSets) {
  for (std::size_t d = 2; d <= 7; ++d) {
    const Graph t = dendrimer(d);
    EXPECT_EQ(t.order(), 1 + d * subtree(d - 1)) << d;
    EXPECT_EQ(t.size(), t.order() - 1);
    std::set<std::size_t> set;
    for (Vertex v = 0; v < t.order(); ++v) set.insert(t.degree(v));
    std::set<std::size_t> expected;
    for (std::size_t j = 1; j <= d; ++j) expected.insert(j);
    EXPECT_EQ(set, expected);
    for (const Edge& e : t.edges()) {
      const auto a = t.degree(e.u), b = t.degree(e.v);
      EXPECT_EQ(a > b ? a - b : b - a, 1u);
    }
  }
}

TEST(RandomConnected, Examples) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph p = random_connected(3, 2, seed);
    EXPECT_EQ(degrees(p), (std::multiset<std::size_t>{1, 1, 2}));
    EXPECT_EQ(random_connected(3, 3, seed), complete_graph(3));
  }
  EXPECT_EQ(random_connected(6, 7, 42), random_connected(6, 7, 42));
  EXPECT_EQ(serialize_edge_list(random_connected(6, 7, 42)), serialize_edge_list(random_connected(6, 7, 42)));
}

TEST(RandomConnected, Errors) {
  EXPECT_THROW(random_connected(5, 3, 1), GeneratorError);
  EXPECT_THROW(random_connected(5, 11, 1), GeneratorError);
  EXPECT_THROW(random_connected(2, 1, 1), GeneratorError);
}

TEST(RandomConnected, RequestedShape) {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng.between(3, 40);
    const std::size_t m = rng.between(n - 1, n * (n - 1) / 2);
    const Graph g = random_connected(n, m, rng.next());
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(g.size(), m);
  }
}

TEST(RandomConnected, PinnedStream) {
  // The 10000th draw of mt19937_64 from the default seed is fixed by the
  // C++ standard, so streams agree across platforms.
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.below(1000), b.below(1000));
  Rng fixed(5489u);
  for (int i = 0; i < 9999; ++i) fixed.next();
  EXPECT_EQ(fixed.next(), 9981545732273789042ull);
}

TEST(AllConnectedGraphs, Counts) {
  // Labelled connected graphs on 3, 4, 5 vertices.
  EXPECT_EQ(all_connected_graphs(3).size(), 4u);
  EXPECT_EQ(all_connected_graphs(4).size(), 38u);
  EXPECT_EQ(all_connected_graphs(5).size(), 728u);
}

TEST(GenerateCorpus, Examples) {
  CorpusSpec stars;
  stars.families = {{Family::kStar, 3, 6}};
  const auto s = generate_corpus(stars);
  ASSERT_EQ(s.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(s[i].graph, star_graph(i + 3));
    EXPECT_EQ(s[i].label, "star(" + std::to_string(i + 3) + ")");
  }

  CorpusSpec random;
  random.random_count = 100;
  random.seed = 9;
  const auto a = generate_corpus(random), b = generate_corpus(random);
  ASSERT_EQ(a.size(), 100u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].label, b[i].label);
    EXPECT_EQ(a[i].graph, b[i].graph);
    EXPECT_GE(a[i].graph.order(), 3u);
    EXPECT_LE(a[i].graph.order(), 24u);
  }
  random.seed = 10;
  const auto c = generate_corpus(random);
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) same += a[i].graph == c[i].graph;
  EXPECT_LT(same, 50u);

  EXPECT_TRUE(generate_corpus(CorpusSpec{}).empty());
}

TEST(GenerateCorpus, DefaultCoversEveryFamilyWithExpectedFlags) {
  const auto corpus = generate_corpus(default_corpus_spec(1, 0));
  std::set<std::string> seen;
  for (const LabeledGraph& lg : corpus) {
    const std::string family = lg.label.substr(0, lg.label.find('('));
    seen.insert(family);
    const GraphClassification c = classify(lg.graph);
    if (family == "wheel" || family == "complete_split" || family == "complete_multipartite" ||
        family == "complete_bipartite") {
      EXPECT_TRUE(c.well_stabilized || c.regular) << lg.label;
    }
    if (family == "complete_bipartite") {
      EXPECT_TRUE(c.semiregular || c.regular) << lg.label;
    }
    if (family == "dendrimer") {
      EXPECT_TRUE(c.weakly_irregular) << lg.label;
    }
    if (family == "regular_random" || family == "cycle" || family == "complete") {
      EXPECT_TRUE(c.regular) << lg.label;
    }
  }
  EXPECT_EQ(seen.size(), 11u);
}
