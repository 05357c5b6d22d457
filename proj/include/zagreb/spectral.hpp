#pragma once

#include "zagreb/graph.hpp"

#include <cstddef>
#include <stdexcept>

namespace zagreb {

struct SpectralResult {
  double rho = 0.0;
  std::size_t iterations = 0;
  // Infinity norm of A v - rho v, with v scaled to unit maximum entry.
  double residual = 0.0;
};

class SpectralConvergenceError : public std::runtime_error {
 public:
  explicit SpectralConvergenceError(SpectralResult best);
  const SpectralResult& best() const { return best_; }

 private:
  SpectralResult best_;
};

inline constexpr double kDefaultSpectralTolerance = 1e-10;
inline constexpr std::size_t kDefaultSpectralMaxIterations = 100000;

/// Largest adjacency eigenvalue by power iteration from the all-ones vector.
/// Iterates with A + I so that the -rho eigenvalue of bipartite graphs cannot
/// stall convergence; the estimate is the Rayleigh quotient of A.
/// Throws SpectralConvergenceError (carrying the best estimate) when the
/// residual is still above `tolerance` after `max_iterations` steps.
SpectralResult spectral_radius(const Graph& g, double tolerance = kDefaultSpectralTolerance,
                               std::size_t max_iterations = kDefaultSpectralMaxIterations);

}  // namespace zagreb
