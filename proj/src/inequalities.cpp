#include "zagreb/inequalities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>

namespace zagreb {

namespace {

// Both sides of a row, normalised so that the claim reads lo <= hi.
struct Sides {
  bool exact = true;
  Rational lo, hi;
  double lo_real = 0.0, hi_real = 0.0;
  // Identity rows may tie more than two quantities together.
  bool identity_ok = true;
};

Sides exact_sides(Rational lo, Rational hi) {
  Sides s;
  s.exact = true;
  s.lo_real = to_double(lo);
  s.hi_real = to_double(hi);
  s.lo = std::move(lo);
  s.hi = std::move(hi);
  return s;
}

Sides real_sides(double lo, double hi) {
  Sides s;
  s.exact = false;
  s.lo_real = lo;
  s.hi_real = hi;
  return s;
}

// Degree data shared by the row evaluators.
struct Q {
  Rational n, m, m1, m2, f, p5, x2, x3, z2, irr, irl, h, var, dmax, dmin;
  double rho = 0.0;
  const CheckInputs* in = nullptr;

  explicit Q(const CheckInputs& inputs) : in(&inputs) {
    const InvariantReport& r = inputs.report;
    n = Integer(r.n);
    m = Integer(r.m);
    m1 = r.m1;
    m2 = r.m2;
    f = r.forgotten;
    p5 = r.degree_power_sum5;
    x2 = r.dtqd;
    x3 = r.x3;
    z2 = r.second_variable_zagreb2;
    irr = r.irr;
    irl = r.irl;
    h = r.harmonic;
    var = r.var;
    dmax = Integer(r.max_degree);
    dmin = Integer(r.min_degree);
    if (inputs.spectral) rho = inputs.spectral->rho;
  }

  double d(const Rational& v) const { return to_double(v); }
  std::size_t deg(Vertex v) const { return in->profile.degree[v]; }
  std::span<const Edge> edges() const { return in->graph->edges(); }
};

Rational sq(const Rational& x) { return x * x; }

// Sum over edges of sqrt(d_i mu_i d_j mu_j); d_i mu_i is the integer neighbour-degree sum.
double sum_sqrt_neighbor_products(const Q& q) {
  double s = 0.0;
  for (const Edge& e : q.edges()) {
    s += std::sqrt(to_double(q.in->profile.neighbor_degree_sum[e.u]) *
                   to_double(q.in->profile.neighbor_degree_sum[e.v]));
  }
  return s;
}

double sum_sqrt_prod_times_sum(const Q& q) {
  double s = 0.0;
  for (const Edge& e : q.edges()) {
    const double a = static_cast<double>(q.deg(e.u)), b = static_cast<double>(q.deg(e.v));
    s += std::sqrt(a * b * (a + b));
  }
  return s;
}

double sum_sqrt_neighbor_sums(const Q& q) {
  double s = 0.0;
  for (const Integer& v : q.in->profile.neighbor_degree_sum) s += std::sqrt(to_double(v));
  return s;
}

Rational sum_squared_neighbor_sums(const Q& q) {
  Integer s = 0;
  for (const Integer& v : q.in->profile.neighbor_degree_sum) s += v * v;
  return Rational(s);
}

Rational sum_mu_squared(const Q& q) {
  Rational s = 0;
  for (const Rational& mu : q.in->profile.mu) s += mu * mu;
  return s;
}

Rational sum_abs_degree_minus_mu(const Q& q) {
  Rational s = 0;
  const auto& p = q.in->profile;
  for (std::size_t i = 0; i < p.degree.size(); ++i) s += abs(Rational(Integer(p.degree[i])) - p.mu[i]);
  return s;
}

double sum_abs_sqrt_mu_diff(const Q& q) {
  double s = 0.0;
  for (const Edge& e : q.edges()) {
    s += std::abs(std::sqrt(to_double(q.in->profile.mu[e.u])) - std::sqrt(to_double(q.in->profile.mu[e.v])));
  }
  return s;
}

double sum_sqrt_mu_products(const Q& q) {
  double s = 0.0;
  for (const Edge& e : q.edges()) {
    s += std::sqrt(to_double(q.in->profile.mu[e.u]) * to_double(q.in->profile.mu[e.v]));
  }
  return s;
}

Rational sum_sum_over_product(const Q& q) {
  Rational s = 0;
  for (const Edge& e : q.edges()) {
    const Integer a = q.deg(e.u), b = q.deg(e.v);
    s += Rational(a + b, a * b);
  }
  return s;
}

double general_x(const Q& q, double alpha) {
  return q.in->report.general_sum_connectivity.at(alpha);
}

struct Row {
  CheckDescriptor descriptor;
  std::function<Sides(const Q&)> evaluate;
};

Row row(std::string id, std::string statement, Arithmetic arithmetic, EqualityMode mode,
        EqualityClass cls, std::function<Sides(const Q&)> eval,
        Guard guard = Guard::kNone, bool spectral = false) {
  CheckDescriptor d;
  d.id = std::move(id);
  d.statement = std::move(statement);
  d.arithmetic = arithmetic;
  d.mode = mode;
  d.equality_class = cls;
  d.guard = guard;
  d.needs_spectral = spectral;
  return {std::move(d), std::move(eval)};
}

using A = Arithmetic;
using M = EqualityMode;
using C = EqualityClass;

std::vector<Row> build_registry() {
  std::vector<Row> r;
  const auto kExact = A::kExact;
  const auto kReal = A::kReal;

  // Zagreb indices against extreme degrees
  r.push_back(row("L1a", "M1 <= M2/delta + delta*m", kExact, M::kSufficient, C::kRegularOrSemiregular, [](const Q& q) { return exact_sides(q.m1, q.m2 / q.dmin + q.dmin * q.m); }));
  r.push_back(row("L1b", "M1 <= M2/Delta + Delta*m", kExact, M::kSufficient, C::kRegularOrSemiregular, [](const Q& q) { return exact_sides(q.m1, q.m2 / q.dmax + q.dmax * q.m); }));

  // General sum-connectivity against M1, several exponents
  r.push_back(row("LEM2@-1", "X_-1 >= M1^-1 m^2", kExact, M::kIff, C::kRegularOrSemiregular,
                  [](const Q& q) { return exact_sides(q.m * q.m / q.m1, q.h / 2); }));
  r.push_back(row("LEM2@-0.5", "X_-1/2 >= M1^-1/2 m^3/2", kReal, M::kIff, C::kRegularOrSemiregular, [](const Q& q) {
                    return real_sides(std::pow(q.d(q.m), 1.5) / std::sqrt(q.d(q.m1)), general_x(q, -0.5));
                  }));
  r.push_back(row("LEM2@0.5", "X_1/2 <= M1^1/2 m^1/2", kReal, M::kIff, C::kRegularOrSemiregular, [](const Q& q) {
                    return real_sides(general_x(q, 0.5), std::sqrt(q.d(q.m1) * q.d(q.m)));
                  }));
  r.push_back(row("LEM2@2", "X_2 >= M1^2 / m", kExact, M::kIff, C::kRegularOrSemiregular,
                  [](const Q& q) { return exact_sides(sq(q.m1) / q.m, q.x2); }));
  r.push_back(row("LEM2@3", "X_3 >= M1^3 / m^2", kExact, M::kIff, C::kRegularOrSemiregular,
                  [](const Q& q) { return exact_sides(sq(q.m1) * q.m1 / sq(q.m), q.x3); }));

  r.push_back(row("COR1", "X >= m^3/2 / sqrt(M1)", kReal, M::kIff, C::kRegularOrSemiregular,
                  [](const Q& q) {
                    return real_sides(std::pow(q.d(q.m), 1.5) / std::sqrt(q.d(q.m1)), q.in->report.sum_connectivity);
                  }));

  // Signless Laplacian quadratic form
  r.push_back(row("COR2a", "F + 2M2 >= M1^2 / m", kExact, M::kIff, C::kRegularOrSemiregular,
                  [](const Q& q) { return exact_sides(sq(q.m1) / q.m, q.x2); }));
  r.push_back(row("COR2b", "2 Delta >= (F + 2M2)/M1 >= M1/m  [chain ends]", kExact, M::kIff, C::kRegular, [](const Q& q) { return exact_sides(q.m1 / q.m, 2 * q.dmax); }));
  r.push_back(row("COR2b.1", "2 Delta >= (F + 2M2)/M1", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(q.x2 / q.m1, 2 * q.dmax); }));
  r.push_back(row("COR2b.2", "(F + 2M2)/M1 >= M1/m", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(q.m1 / q.m, q.x2 / q.m1); }));

  r.push_back(row("COR3a", "F + 2M2 <= (m+1) M1", kExact, M::kIff, C::kK3OrStar,
                  [](const Q& q) { return exact_sides(q.x2, (q.m + 1) * q.m1); }));
  r.push_back(row("COR3b", "F + 2M2 <= n M1 (triangle-free)", kExact, M::kIff, C::kCompleteBipartite, [](const Q& q) { return exact_sides(q.x2, q.n * q.m1); },
                  Guard::kTriangleFree));

  // Spectral radius chains
  r.push_back(row("COR4", "rho >= 2M2/M1 >= M1/m - F/M1  [chain ends]", kReal, M::kIff, C::kRegular,
                  [](const Q& q) { return real_sides(q.d(q.m1 / q.m - q.f / q.m1), q.rho); }, Guard::kNone, true));
  r.push_back(row("COR4.1", "rho >= 2M2/M1", kReal, M::kSufficient, C::kRegular,
                  [](const Q& q) { return real_sides(q.d(2 * q.m2 / q.m1), q.rho); }, Guard::kNone, true));
  r.push_back(row("COR4.2", "2M2/M1 >= M1/m - F/M1", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(q.m1 / q.m - q.f / q.m1, 2 * q.m2 / q.m1); }));

  r.push_back(row("COR5a", "X_3 >= M1^3 / m^2", kExact, M::kIff, C::kRegularOrSemiregular,
                  [](const Q& q) { return exact_sides(sq(q.m1) * q.m1 / sq(q.m), q.x3); }));
  r.push_back(row("COR5b", "2 Delta >= X_3/X_2 >= M1^3/(m^2 (F+2M2))  [chain ends]", kExact, M::kIff,
                  C::kRegular,
                  [](const Q& q) { return exact_sides(sq(q.m1) * q.m1 / (sq(q.m) * q.x2), 2 * q.dmax); }));
  r.push_back(row("COR5b.1", "2 Delta >= X_3/X_2", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(q.x3 / q.x2, 2 * q.dmax); }));
  r.push_back(row("COR5b.2", "X_3/X_2 >= M1^3/(m^2 (F+2M2))", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(sq(q.m1) * q.m1 / (sq(q.m) * q.x2), q.x3 / q.x2); }));

  // F - 2M2 is a Laplacian quadratic form
  r.push_back(row("EQ2", "F >= 2 M2", kExact, M::kIff, C::kRegular,
                  [](const Q& q) { return exact_sides(2 * q.m2, q.f); }));
  r.push_back(row("REM2", "F - 2M2 <= m (n-2)^2", kExact, M::kIff, C::kStar,
                  [](const Q& q) { return exact_sides(q.irl, q.m * sq(q.n - 2)); }));

  r.push_back(row("EQ4", "F >= (2m/n) M1 >= 8 m^3/n^2  [chain ends]", kExact, M::kIff, C::kRegular,
                  [](const Q& q) { return exact_sides(8 * q.m * sq(q.m) / sq(q.n), q.f); }));
  r.push_back(row("EQ4.1", "F >= (2m/n) M1", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(2 * q.m / q.n * q.m1, q.f); }));
  r.push_back(row("EQ4.2", "(2m/n) M1 >= 8 m^3/n^2", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(8 * q.m * sq(q.m) / sq(q.n), 2 * q.m / q.n * q.m1); }));

  r.push_back(row("COR6", "M1/n <= F/(2m)", kExact, M::kIff, C::kRegular,
                  [](const Q& q) { return exact_sides(q.m1 / q.n, q.f / (2 * q.m)); }));

  r.push_back(row("COR7", "nF/(2m) >= M1 >= (F+2M2)/(m+1)  [chain ends]", kExact, M::kIff, C::kK3, [](const Q& q) { return exact_sides(q.x2 / (q.m + 1), q.n * q.f / (2 * q.m)); }));
  r.push_back(row("COR7.1", "nF/(2m) >= M1", kExact, M::kSufficient, C::kK3,
                  [](const Q& q) { return exact_sides(q.m1, q.n * q.f / (2 * q.m)); }));
  r.push_back(row("COR7.2", "M1 >= (F+2M2)/(m+1)", kExact, M::kSufficient, C::kK3,
                  [](const Q& q) { return exact_sides(q.x2 / (q.m + 1), q.m1); }));

  r.push_back(row("EQ5a", "M1/n >= 4m^2/n^2", kExact, M::kIff, C::kRegular,
                  [](const Q& q) { return exact_sides(4 * sq(q.m) / sq(q.n), q.m1 / q.n); }));
  r.push_back(row("EQ5b", "M2/m >= 4m^2/n^2", kExact, M::kIff, C::kRegular,
                  [](const Q& q) { return exact_sides(4 * sq(q.m) / sq(q.n), q.m2 / q.m); }));

  r.push_back(row("LEM7", "F + 2M2 >= 2m(M1/n + M2/m) >= 16 m^3/n^2  [chain ends]", kExact, M::kIff,
                  C::kRegular,
                  [](const Q& q) { return exact_sides(16 * q.m * sq(q.m) / sq(q.n), q.x2); }));
  r.push_back(row("LEM7.1", "F + 2M2 >= 2m(M1/n + M2/m)", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(2 * q.m * (q.m1 / q.n + q.m2 / q.m), q.x2); }));
  r.push_back(row("LEM7.2", "2m(M1/n + M2/m) >= 16 m^3/n^2", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) {
                    return exact_sides(16 * q.m * sq(q.m) / sq(q.n), 2 * q.m * (q.m1 / q.n + q.m2 / q.m));
                  }));

  r.push_back(row("EQ6", "F <= (Delta+delta) M1 - 2m Delta delta", kExact, M::kSufficient,
                  C::kRegularOrBidegreed,
                  [](const Q& q) { return exact_sides(q.f, (q.dmax + q.dmin) * q.m1 - 2 * q.m * q.dmax * q.dmin); }));
  r.push_back(row("COR8", "rho >= sqrt(M1/n) >= sqrt((F + 2m Delta delta)/(n(Delta+delta)))  [chain ends]",
                  kReal, M::kSufficient, C::kRegularOrSemiregular,
                  [](const Q& q) {
                    const Rational inner = (q.f + 2 * q.m * q.dmax * q.dmin) / (q.n * (q.dmax + q.dmin));
                    return real_sides(std::sqrt(q.d(inner)), q.rho);
                  },
                  Guard::kNone, true));
  r.push_back(row("COR8.1", "rho >= sqrt(M1/n)", kReal, M::kSufficient, C::kRegularOrSemiregular, [](const Q& q) { return real_sides(std::sqrt(q.d(q.m1 / q.n)), q.rho); },
                  Guard::kNone, true));
  r.push_back(row("COR8.2", "M1/n >= (F + 2m Delta delta)/(n(Delta+delta))  [squared link]", kExact,
                  M::kSufficient, C::kRegularOrSemiregular, [](const Q& q) {
                    return exact_sides((q.f + 2 * q.m * q.dmax * q.dmin) / (q.n * (q.dmax + q.dmin)), q.m1 / q.n);
                  }));

  r.push_back(row("EQ7", "F <= 2M2 + n M1 - 4m^2", kExact, M::kSufficient, C::kRegularOrWellStabilized, [](const Q& q) { return exact_sides(q.f, 2 * q.m2 + q.n * q.m1 - 4 * sq(q.m)); }));
  r.push_back(row("COR9", "F - 2M2 <= n^2 VAR", kExact, M::kSufficient, C::kRegularOrWellStabilized, [](const Q& q) { return exact_sides(q.irl, sq(q.n) * q.var); }));
  r.push_back(row("COR10", "rho >= 2M2/M1 >= (F + 4m^2)/M1 - n  [chain ends]", kReal, M::kSufficient,
                  C::kRegular,
                  [](const Q& q) { return real_sides(q.d((q.f + 4 * sq(q.m)) / q.m1 - q.n), q.rho); },
                  Guard::kNone, true));
  r.push_back(row("COR10.1", "rho >= 2M2/M1", kReal, M::kSufficient, C::kRegular,
                  [](const Q& q) { return real_sides(q.d(2 * q.m2 / q.m1), q.rho); }, Guard::kNone, true));
  r.push_back(row("COR10.2", "2M2/M1 >= (F + 4m^2)/M1 - n", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides((q.f + 4 * sq(q.m)) / q.m1 - q.n, 2 * q.m2 / q.m1); }));

  // Neighbour-degree averages
  r.push_back(row("P1", "M2 >= sum sqrt(d_i d_j mu_i mu_j)", kReal, M::kSufficient, C::kRegularOrSemiregular,
                  [](const Q& q) { return real_sides(sum_sqrt_neighbor_products(q), q.d(q.m2)); }));
  r.push_back(row("P2", "(sum sqrt(d_i d_j (d_i + d_j)))^2 <= M1 M2", kReal, M::kSufficient,
                  C::kRegularOrSemiregular, [](const Q& q) {
                    const double s = sum_sqrt_prod_times_sum(q);
                    return real_sides(s * s, q.d(q.m1 * q.m2));
                  }));
  r.push_back(row("P3", "2M2 (lambda=2) >= M2^2 / m", kExact, M::kSufficient, C::kRegularOrSemiregular, [](const Q& q) { return exact_sides(sq(q.m2) / q.m, q.z2); }));
  r.push_back(row("P4", "sum d^5 + 2 * 2M2 (lambda=2) >= F^2 / m", kExact, M::kSufficient,
                  C::kRegularOrSemiregular,
                  [](const Q& q) { return exact_sides(sq(q.f) / q.m, q.p5 + 2 * q.z2); }));
  r.push_back(row("P5", "M1 >= (1/n) (sum sqrt(d_i mu_i))^2", kReal, M::kSufficient, C::kRegularOrSemiregular, [](const Q& q) {
                    const double s = sum_sqrt_neighbor_sums(q);
                    return real_sides(s * s / q.d(q.n), q.d(q.m1));
                  }));
  r.push_back(row("P6", "M1/n <= (1/M1) sum (d_i mu_i)^2", kExact, M::kSufficient, C::kRegularOrSemiregular,
                  [](const Q& q) { return exact_sides(q.m1 / q.n, sum_squared_neighbor_sums(q) / q.m1); }));
  r.push_back(row("COR14", "rho^2 >= sum (d_i mu_i)^2 / M1 >= M1/n  [chain ends]", kReal, M::kSufficient,
                  C::kRegular,
                  [](const Q& q) { return real_sides(q.d(q.m1 / q.n), q.rho * q.rho); }, Guard::kNone, true));
  r.push_back(row("COR14.1", "rho^2 >= sum (d_i mu_i)^2 / M1", kReal, M::kSufficient, C::kRegular,
                  [](const Q& q) { return real_sides(q.d(sum_squared_neighbor_sums(q) / q.m1), q.rho * q.rho); },
                  Guard::kNone, true));
  r.push_back(row("COR14.2", "sum (d_i mu_i)^2 / M1 >= M1/n", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(q.m1 / q.n, sum_squared_neighbor_sums(q) / q.m1); }));
  r.push_back(row("P7", "sum mu_i^2 >= (1/n)(sum |d_i - mu_i|)^2 + M1", kExact, M::kSufficient,
                  C::kRegularOrSemiregular, [](const Q& q) {
                    return exact_sides(sq(sum_abs_degree_minus_mu(q)) / q.n + q.m1, sum_mu_squared(q));
                  }));
  r.push_back(row("P8", "(1/m)(sum |sqrt mu_i - sqrt mu_j|)^2 <= M1 - 2 sum sqrt(mu_i mu_j)", kReal,
                  M::kSufficient, C::kRegularOrSemiregular, [](const Q& q) {
                    const double s = sum_abs_sqrt_mu_diff(q);
                    return real_sides(s * s / q.d(q.m), q.d(q.m1) - 2.0 * sum_sqrt_mu_products(q));
                  }));
  r.push_back(row("P9", "X_3 >= (F + 2M2)^2 / M1", kExact, M::kSufficient, C::kRegularOrSemiregular, [](const Q& q) { return exact_sides(sq(q.x2) / q.m1, q.x3); }));
  r.push_back(row("COR15a", "2 Delta M1 >= F + 2M2", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(q.x2, 2 * q.dmax * q.m1); }));
  r.push_back(row("COR15b", "Delta - F/(2 M1) >= M2/M1", kExact, M::kSufficient, C::kRegular,
                  [](const Q& q) { return exact_sides(q.m2 / q.m1, q.dmax - q.f / (2 * q.m1)); }));
  r.push_back(row("P10", "X_1/2^2 <= M2 sum (d_i + d_j)/(d_i d_j)", kReal, M::kSufficient,
                  C::kRegularOrSemiregular, [](const Q& q) {
                    const double x = general_x(q, 0.5);
                    return real_sides(x * x, q.d(q.m2 * sum_sum_over_product(q)));
                  }));

  // Irregularity
  r.push_back(row("EQ13", "Irr <= F - 2M2", kExact, M::kSufficient, C::kRegularOrNearlyRegular, [](const Q& q) { return exact_sides(q.irr, q.irl); }));
  r.push_back(row("COR16", "Irr = F - 2M2 = m (weakly irregular)", kExact, M::kIdentity, C::kWeaklyIrregular,
                  [](const Q& q) {
                    Sides s = exact_sides(q.irr, q.irl);
                    s.identity_ok = q.irr == q.m && q.irl == q.m;
                    return s;
                  },
                  Guard::kWeaklyIrregular));
  r.push_back(row("P12", "Irr^2 <= m (F - 2M2)", kExact, M::kIff, C::kRegularOrWeaklySemiregular, [](const Q& q) { return exact_sides(sq(q.irr), q.m * q.irl); }));

  // Harmonic index
  r.push_back(row("H1", "H >= (2/m) X^2 >= 2m^2/M1  [chain ends]", kExact, M::kIff, C::kRegularOrSemiregular, [](const Q& q) { return exact_sides(2 * sq(q.m) / q.m1, q.h); }));
  r.push_back(row("H1.1", "H >= (2/m) X^2", kReal, M::kSufficient, C::kRegularOrSemiregular, [](const Q& q) {
                    const double x = q.in->report.sum_connectivity;
                    return real_sides(2.0 / q.d(q.m) * x * x, q.d(q.h));
                  }));
  r.push_back(row("H1.2", "(2/m) X^2 >= 2m^2/M1", kReal, M::kSufficient, C::kRegularOrSemiregular, [](const Q& q) {
                    const double x = q.in->report.sum_connectivity;
                    return real_sides(q.d(2 * sq(q.m) / q.m1), 2.0 / q.d(q.m) * x * x);
                  }));
  r.push_back(row("HREG", "H = n/2 (regular)", kExact, M::kIdentity, C::kRegular,
                  [](const Q& q) { return exact_sides(q.h, q.n / 2); }, Guard::kRegular));

  return r;
}

const std::vector<Row>& registry_rows() {
  static const std::vector<Row> rows = build_registry();
  return rows;
}

const std::vector<CheckDescriptor>& registry_descriptors() {
  static const std::vector<CheckDescriptor> d = [] {
    std::vector<CheckDescriptor> out;
    for (const Row& r : registry_rows()) out.push_back(r.descriptor);
    return out;
  }();
  return d;
}

bool guard_passes(Guard guard, const GraphClassification& c) {
  switch (guard) {
    case Guard::kNone: return true;
    case Guard::kTriangleFree: return c.triangle_free;
    case Guard::kWeaklyIrregular: return c.weakly_irregular;
    case Guard::kRegular: return c.regular.has_value();
  }
  return false;
}

CheckResult evaluate_row(const Row& row, const CheckInputs& inputs, const std::string& label,
                         const Tolerances& tol) {
  const CheckDescriptor& d = row.descriptor;
  CheckResult res;
  res.check_id = d.id;
  res.graph_label = label;
  if (!guard_passes(d.guard, inputs.classification)) {
    res.applicable = false;
    return res;
  }
  if (d.needs_spectral && !inputs.spectral) {
    throw std::invalid_argument("check " + d.id + " needs a spectral radius estimate");
  }
  const Sides s = row.evaluate(Q(inputs));
  res.lhs = s.lo_real;
  res.rhs = s.hi_real;
  res.expected_equality = d.mode == EqualityMode::kIdentity ||
                          (d.mode != EqualityMode::kNone && in_class(d.equality_class, inputs.classification));
  if (s.exact) {
    const Rational slack = s.hi - s.lo;
    res.exact_lhs = s.lo;
    res.exact_rhs = s.hi;
    res.slack = to_double(slack);
    res.equality_achieved = slack == 0;
    res.holds = d.mode == EqualityMode::kIdentity ? (slack == 0 && s.identity_ok) : slack >= 0;
  } else {
    const double scale = std::max({std::abs(s.lo_real), std::abs(s.hi_real), 1.0});
    double hold_tol = tol.hold;
    double eq_tol = tol.equality;
    if (d.needs_spectral && inputs.spectral) {
      const double widened = tol.residual_factor * inputs.spectral->residual;
      hold_tol = std::max(hold_tol, widened);
      eq_tol = std::max(eq_tol, widened);
    }
    res.slack = s.hi_real - s.lo_real;
    res.equality_achieved = std::abs(res.slack) <= eq_tol * scale;
    res.holds = d.mode == EqualityMode::kIdentity ? (res.equality_achieved && s.identity_ok)
                                                   : res.slack >= -hold_tol * scale;
  }
  return res;
}

}  // namespace

std::string_view to_string(EqualityMode mode) {
  switch (mode) {
    case EqualityMode::kIff: return "iff";
    case EqualityMode::kSufficient: return "sufficient";
    case EqualityMode::kIdentity: return "identity";
    case EqualityMode::kNone: return "none";
  }
  return "?";
}

std::string_view to_string(EqualityClass cls) {
  switch (cls) {
    case C::kNone: return "none";
    case C::kRegular: return "regular";
    case C::kRegularOrSemiregular: return "regular|semiregular";
    case C::kRegularOrBidegreed: return "regular|bidegreed";
    case C::kRegularOrNearlyRegular: return "regular|nearly_regular";
    case C::kRegularOrWeaklySemiregular: return "regular|weakly_semiregular";
    case C::kRegularOrWellStabilized: return "regular|well_stabilized";
    case C::kK3: return "K3";
    case C::kK3OrStar: return "K3|star";
    case C::kStar: return "star";
    case C::kCompleteBipartite: return "complete_bipartite";
    case C::kWeaklyIrregular: return "weakly_irregular";
  }
  return "?";
}

bool in_class(EqualityClass cls, const GraphClassification& c) {
  const bool regular = c.regular.has_value();
  switch (cls) {
    case C::kNone: return false;
    case C::kRegular: return regular;
    case C::kRegularOrSemiregular: return regular || c.semiregular;
    case C::kRegularOrBidegreed: return regular || c.bidegreed.has_value();
    case C::kRegularOrNearlyRegular: return regular || c.nearly_regular;
    case C::kRegularOrWeaklySemiregular: return regular || c.weakly_semiregular.has_value();
    case C::kRegularOrWellStabilized: return regular || c.well_stabilized;
    case C::kK3: return c.triangle;
    case C::kK3OrStar: return c.triangle || c.star.has_value();
    case C::kStar: return c.star.has_value();
    case C::kCompleteBipartite: return c.complete_bipartite.has_value();
    case C::kWeaklyIrregular: return c.weakly_irregular;
  }
  return false;
}

std::span<const CheckDescriptor> check_registry() { return registry_descriptors(); }

const CheckDescriptor& find_check(const std::string& id) {
  for (const CheckDescriptor& d : registry_descriptors()) {
    if (d.id == id) return d;
  }
  throw UnknownCheckError("unknown check id '" + id + "'");
}

CheckInputs prepare_inputs(const Graph& g, bool with_spectral, double spectral_tolerance,
                           std::size_t spectral_max_iterations) {
  CheckInputs in;
  in.graph = &g;
  in.profile = degree_profile(g);
  in.report = invariant_report(g);
  in.classification = classify(g);
  if (with_spectral) in.spectral = spectral_radius(g, spectral_tolerance, spectral_max_iterations);
  return in;
}

CheckResult evaluate_check(const std::string& id, const CheckInputs& inputs, const std::string& graph_label,
                           const Tolerances& tol) {
  for (const Row& r : registry_rows()) {
    if (r.descriptor.id == id) return evaluate_row(r, inputs, graph_label, tol);
  }
  throw UnknownCheckError("unknown check id '" + id + "'");
}

std::vector<const CheckResult*> SuiteReport::defects() const {
  std::vector<const CheckResult*> out;
  for (const CheckResult& r : results) {
    if (r.applicable && !r.holds) out.push_back(&r);
  }
  return out;
}

SuiteReport run_suite(const Graph& g, const std::string& label, const SuiteOptions& options) {
  const CheckInputs inputs =
      prepare_inputs(g, options.spectral, options.spectral_tolerance, options.spectral_max_iterations);
  SuiteReport report;
  report.graph_label = label;
  for (const Row& r : registry_rows()) {
    if (r.descriptor.needs_spectral && !inputs.spectral) continue;
    CheckResult res = evaluate_row(r, inputs, label, options.tolerances);
    if (!options.corrupt_check.empty() && res.check_id == options.corrupt_check && res.applicable) {
      res.holds = false;
    }
    report.results.push_back(std::move(res));
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return report;
}

bool EqualityAudit::has_violations() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.violations > 0; });
}

bool EqualityAudit::has_sufficiency_failures() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const auto& kv) { return !kv.second.sufficiency_failures.empty(); });
}

bool EqualityAudit::has_necessity_failures() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const auto& kv) { return !kv.second.necessity_failures.empty(); });
}

bool EqualityAudit::clean() const {
  return !has_violations() && !has_sufficiency_failures() && !has_necessity_failures();
}

EqualityAudit verify_equality_classes(std::span<const LabeledGraph> corpus, const SuiteOptions& options) {
  EqualityAudit audit;
  audit.reports.resize(corpus.size());

  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(corpus.size(), 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
          try {
            audit.reports[i] = run_suite(corpus[i].graph, corpus[i].label, options);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(audit.reports.begin(), audit.reports.end(),
                   [](const SuiteReport& a, const SuiteReport& b) { return a.graph_label < b.graph_label; });

  for (const CheckDescriptor& d : check_registry()) audit.checks[d.id].check_id = d.id;
  for (const SuiteReport& report : audit.reports) {
    for (const CheckResult& r : report.results) {
      if (!r.applicable) continue;
      const CheckDescriptor& d = find_check(r.check_id);
      CheckAudit& a = audit.checks[r.check_id];
      ++a.evaluated;
      if (!r.holds) {
        ++a.violations;
        a.violation_labels.push_back(r.graph_label);
      }
      if (d.mode == EqualityMode::kNone) continue;
      if (d.mode == EqualityMode::kIdentity) {
        ++a.class_members;
        if (r.equality_achieved) ++a.class_equalities;
        continue;
      }
      if (r.expected_equality) {
        ++a.class_members;
        if (r.equality_achieved) {
          ++a.class_equalities;
        } else {
          a.sufficiency_failures.push_back(r.graph_label);
        }
      } else if (r.equality_achieved) {
        ++a.equalities_outside;
        if (d.mode == EqualityMode::kIff) {
          (d.arithmetic == Arithmetic::kExact ? a.necessity_failures : a.observations).push_back(r.graph_label);
        }
      }
    }
  }
  return audit;
}

}  // namespace zagreb
