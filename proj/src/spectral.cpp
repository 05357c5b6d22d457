#include "zagreb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace zagreb {

SpectralConvergenceError::SpectralConvergenceError(SpectralResult best)
    : std::runtime_error("power iteration did not converge after " +
                         std::to_string(best.iterations) + " iterations (residual " +
                         std::to_string(best.residual) + ")"),
      best_(best) {}

SpectralResult spectral_radius(const Graph& g, double tolerance, std::size_t max_iterations) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_iterations == 0) throw std::invalid_argument("max_iterations must be at least 1");

  const std::size_t n = g.order();
  std::vector<double> x(n, 1.0), y(n);
  SpectralResult result;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    for (Vertex v = 0; v < n; ++v) {
      double s = 0.0;
      for (Vertex w : g.neighbors(v)) s += x[w];
      y[v] = s;
    }
    double xy = 0.0, xx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      xy += x[i] * y[i];
      xx += x[i] * x[i];
    }
    const double rho = xy / xx;
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - rho * x[i]));
    result = {rho, it, residual};
    if (residual <= tolerance) return result;

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += y[i];
      scale = std::max(scale, x[i]);
    }
    for (double& xi : x) xi /= scale;
  }
  throw SpectralConvergenceError(result);
}

}  // namespace zagreb
