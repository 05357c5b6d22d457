#include "zagreb/generators.hpp"
#include "zagreb/invariants.hpp"
#include "zagreb/spectral.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>

using namespace zagreb;

namespace {

double eigen_largest(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

}  // namespace

TEST(SpectralRadius, Examples) {
  EXPECT_NEAR(spectral_radius(cycle_graph(4)).rho, 2.0, 1e-9);
  EXPECT_NEAR(spectral_radius(complete_bipartite_graph(2, 3)).rho, std::sqrt(6.0), 1e-9);
  EXPECT_NEAR(spectral_radius(star_graph(4)).rho, std::sqrt(3.0), 1e-9);
}

TEST(SpectralRadius, BipartiteGraphsConverge) {
  for (std::size_t n = 4; n <= 20; n += 2) {
    const SpectralResult r = spectral_radius(cycle_graph(n));
    EXPECT_NEAR(r.rho, 2.0, 1e-9);
    EXPECT_LE(r.residual, kDefaultSpectralTolerance);
  }
  for (std::size_t p = 1; p <= 6; ++p) {
    for (std::size_t q = std::max<std::size_t>(p, 2); q <= 7; ++q) {
      EXPECT_NEAR(spectral_radius(complete_bipartite_graph(p, q)).rho, std::sqrt(double(p * q)), 1e-9);
    }
  }
}

TEST(SpectralRadius, RegularGraphs) {
  EXPECT_NEAR(spectral_radius(complete_graph(7)).rho, 6.0, 1e-9);
  EXPECT_NEAR(spectral_radius(random_regular_graph(16, 5, 4)).rho, 5.0, 1e-9);
}

TEST(SpectralRadius, MatchesDenseEigensolverOnSmallGraphs) {
  std::vector<Graph> graphs;
  for (std::size_t n = 3; n <= 5; ++n) {
    for (Graph& g : all_connected_graphs(n)) graphs.push_back(std::move(g));
  }
  CorpusSpec spec = default_corpus_spec(3, 2000);
  spec.random_max_n = 8;
  for (LabeledGraph& lg : generate_corpus(spec)) {
    if (lg.graph.order() <= 8) graphs.push_back(std::move(lg.graph));
  }
  ASSERT_GT(graphs.size(), 2000u);
  for (const Graph& g : graphs) {
    const SpectralResult r = spectral_radius(g);
    ASSERT_NEAR(r.rho, eigen_largest(g), 1e-7) << serialize_edge_list(g);
    const DegreeProfile p = degree_profile(g);
    EXPECT_GE(r.rho, double(p.min_degree) - 1e-9);
    EXPECT_LE(r.rho, double(p.max_degree) + 1e-9);
  }
}

TEST(SpectralRadius, NonConvergenceCarriesBestEstimate) {
  const Graph g = random_connected(30, 60, 8);
  try {
    spectral_radius(g, 1e-14, 3);
    FAIL() << "expected SpectralConvergenceError";
  } catch (const SpectralConvergenceError& e) {
    EXPECT_EQ(e.best().iterations, 3u);
    EXPECT_GT(e.best().residual, 1e-14);
    EXPECT_GT(e.best().rho, 0.0);
  }
}

TEST(SpectralRadius, RejectsBadParameters) {
  EXPECT_THROW(spectral_radius(cycle_graph(5), 0.0), std::invalid_argument);
  EXPECT_THROW(spectral_radius(cycle_graph(5), 1e-10, 0), std::invalid_argument);
}
