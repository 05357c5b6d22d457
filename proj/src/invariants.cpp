#include "zagreb/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace zagreb {

namespace {

std::optional<unsigned> as_small_nonnegative_integer(double x) {
  if (x >= 0.0 && x <= 64.0 && std::floor(x) == x) return static_cast<unsigned>(x);
  return std::nullopt;
}

Integer ipow(Integer base, unsigned exp) {
  Integer r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Integer first_zagreb(const Graph& g) { return degree_power_sum(g, 2); }

Integer first_zagreb_edge_form(const Graph& g) {
  Integer s = 0;
  for (const Edge& e : g.edges()) s += g.degree(e.u) + g.degree(e.v);
  return s;
}

Integer second_zagreb(const Graph& g) {
  Integer s = 0;
  for (const Edge& e : g.edges()) s += Integer(g.degree(e.u)) * g.degree(e.v);
  return s;
}

Integer forgotten_index(const Graph& g) { return degree_power_sum(g, 3); }

Integer forgotten_index_edge_form(const Graph& g) {
  Integer s = 0;
  for (const Edge& e : g.edges()) {
    Integer a = g.degree(e.u), b = g.degree(e.v);
    s += a * a + b * b;
  }
  return s;
}

Integer degree_power_sum(const Graph& g, unsigned p) {
  if (p == 0) throw std::invalid_argument("degree power must be positive");
  Integer s = 0;
  for (Vertex v = 0; v < g.order(); ++v) s += ipow(Integer(g.degree(v)), p);
  return s;
}

GeneralizedIndex general_sum_connectivity(const Graph& g, double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("exponent must be finite");
  GeneralizedIndex out;
  for (const Edge& e : g.edges()) {
    out.value += std::pow(static_cast<double>(g.degree(e.u) + g.degree(e.v)), alpha);
  }
  if (auto k = as_small_nonnegative_integer(alpha)) {
    Integer s = 0;
    for (const Edge& e : g.edges()) s += ipow(Integer(g.degree(e.u) + g.degree(e.v)), *k);
    out.exact = s;
  }
  return out;
}

Rational harmonic_index(const Graph& g) {
  Rational s = 0;
  for (const Edge& e : g.edges()) s += Rational(2, Integer(g.degree(e.u) + g.degree(e.v)));
  return s;
}

GeneralizedIndex variable_second_zagreb(const Graph& g, double lambda) {
  if (!std::isfinite(lambda)) throw std::invalid_argument("exponent must be finite");
  GeneralizedIndex out;
  for (const Edge& e : g.edges()) {
    out.value += std::pow(static_cast<double>(g.degree(e.u) * g.degree(e.v)), lambda);
  }
  if (auto k = as_small_nonnegative_integer(lambda)) {
    Integer s = 0;
    for (const Edge& e : g.edges()) s += ipow(Integer(g.degree(e.u)) * g.degree(e.v), *k);
    out.exact = s;
  }
  return out;
}

Integer albertson(const Graph& g) {
  Integer s = 0;
  for (const Edge& e : g.edges()) {
    const std::size_t a = g.degree(e.u), b = g.degree(e.v);
    s += a > b ? a - b : b - a;
  }
  return s;
}

IrregularityIndices irregularity_indices(const Graph& g) {
  const Integer n = g.order();
  const Integer m = g.size();
  const Integer m1 = first_zagreb(g);
  const Integer m2 = second_zagreb(g);
  const Integer f = forgotten_index(g);
  IrregularityIndices out;
  out.irl = f - 2 * m2;
  out.irf = Rational(f) - Rational(2 * m * m1, n);
  out.irm = Rational(m2) - Rational(4 * m * m * m, n * n);
  out.var = Rational(m1, n) - Rational(4 * m * m, n * n);
  return out;
}

InvariantReport invariant_report(const Graph& g) {
  InvariantReport r;
  const DegreeProfile p = degree_profile(g);
  r.n = g.order();
  r.m = g.size();
  r.max_degree = p.max_degree;
  r.min_degree = p.min_degree;
  r.m1 = p.power_sums[1];
  r.forgotten = p.power_sums[2];
  r.degree_power_sum5 = p.power_sums[4];
  r.m2 = 0;
  r.irr = 0;
  r.x3 = 0;
  r.second_variable_zagreb2 = 0;
  r.harmonic = 0;
  for (const Edge& e : g.edges()) {
    const std::size_t a = p.degree[e.u], b = p.degree[e.v];
    const Integer prod = Integer(a) * b;
    const Integer sum = a + b;
    r.m2 += prod;
    r.irr += a > b ? a - b : b - a;
    r.x3 += sum * sum * sum;
    r.second_variable_zagreb2 += prod * prod;
    r.harmonic += Rational(2, sum);
  }
  r.irl = r.forgotten - 2 * r.m2;
  r.dtqd = r.forgotten + 2 * r.m2;
  const Integer n = r.n, m = r.m;
  r.irf = Rational(r.forgotten) - Rational(2 * m * r.m1, n);
  r.irm = Rational(r.m2) - Rational(4 * m * m * m, n * n);
  r.var = Rational(r.m1, n) - Rational(4 * m * m, n * n);
  for (double a : kReportAlphas) r.general_sum_connectivity[a] = general_sum_connectivity(g, a).value;
  for (double l : kReportLambdas) r.variable_zagreb[l] = variable_second_zagreb(g, l).value;
  r.sum_connectivity = r.general_sum_connectivity.at(-0.5);
  return r;
}

}  // namespace zagreb
