#pragma once

#include "zagreb/graph.hpp"
#include "zagreb/numeric.hpp"

#include <map>
#include <optional>

namespace zagreb {

// Sum of squared degrees (vertex form).
Integer first_zagreb(const Graph& g);
// Same value via sum over edges of (d_i + d_j).
Integer first_zagreb_edge_form(const Graph& g);

Integer second_zagreb(const Graph& g);

// Sum of cubed degrees (vertex form).
Integer forgotten_index(const Graph& g);
// Same value via sum over edges of (d_i^2 + d_j^2).
Integer forgotten_index_edge_form(const Graph& g);

/// Sum of d_i^p. Throws std::invalid_argument for p == 0.
Integer degree_power_sum(const Graph& g, unsigned p);

/// A real-valued index with an exact sibling when the exponent allows one.
struct GeneralizedIndex {
  double value = 0.0;
  std::optional<Integer> exact;
};

/// X_alpha = sum over edges of (d_i + d_j)^alpha. Exact for nonnegative
/// integer alpha.
GeneralizedIndex general_sum_connectivity(const Graph& g, double alpha);

/// Sum over edges of 2 / (d_i + d_j).
Rational harmonic_index(const Graph& g);

/// Sum over edges of (d_i d_j)^lambda. Exact for nonnegative integer lambda.
GeneralizedIndex variable_second_zagreb(const Graph& g, double lambda);

/// Albertson index: sum over edges of |d_i - d_j|.
Integer albertson(const Graph& g);

struct IrregularityIndices {
  Integer irl;   // F - 2 M2
  Rational irf;  // F - (2m/n) M1
  Rational irm;  // M2 - 4 m^3 / n^2
  Rational var;  // M1/n - (2m/n)^2
};

IrregularityIndices irregularity_indices(const Graph& g);

struct InvariantReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;

  Integer m1;
  Integer m2;
  Integer forgotten;
  Integer degree_power_sum5;
  Integer irr;
  Integer irl;
  Integer dtqd;  // F + 2 M2 = X_2
  Integer x3;
  Integer second_variable_zagreb2;  // lambda = 2

  Rational irf;
  Rational irm;
  Rational var;
  Rational harmonic;

  double sum_connectivity = 0.0;  // X_{-1/2}
  std::map<double, double> general_sum_connectivity;
  std::map<double, double> variable_zagreb;
};

/// Exponents carried in InvariantReport's keyed maps.
inline constexpr double kReportAlphas[] = {-1.0, -0.5, 0.5, 1.0, 2.0, 3.0};
inline constexpr double kReportLambdas[] = {-1.0, -0.5, 0.5, 1.0, 2.0};

InvariantReport invariant_report(const Graph& g);

}  // namespace zagreb
