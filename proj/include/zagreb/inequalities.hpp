#pragma once

#include "zagreb/classify.hpp"
#include "zagreb/generators.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/invariants.hpp"
#include "zagreb/numeric.hpp"
#include "zagreb/spectral.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zagreb {

enum class Arithmetic { kExact, kReal };

// What the source claims about equality for a row.
enum class EqualityMode {
  kIff,         // equality exactly on the class
  kSufficient,  // equality on the class, no claim elsewhere
  kIdentity,    // both sides are equal on every guarded graph
  kNone,
};

enum class EqualityClass {
  kNone,
  kRegular,
  kRegularOrSemiregular,
  kRegularOrBidegreed,
  kRegularOrNearlyRegular,
  kRegularOrWeaklySemiregular,
  kRegularOrWellStabilized,
  kK3,
  kK3OrStar,
  kStar,
  kCompleteBipartite,
  kWeaklyIrregular,
};

enum class Guard { kNone, kTriangleFree, kWeaklyIrregular, kRegular };

std::string_view to_string(EqualityMode mode);
std::string_view to_string(EqualityClass cls);
bool in_class(EqualityClass cls, const GraphClassification& c);

struct CheckDescriptor {
  std::string id;         // e.g. "COR4" (chain ends) or "COR4.1" (one link)
  std::string statement;  // as usually written, before normalisation
  Arithmetic arithmetic = Arithmetic::kExact;
  EqualityMode mode = EqualityMode::kNone;
  EqualityClass equality_class = EqualityClass::kNone;
  Guard guard = Guard::kNone;
  bool needs_spectral = false;
};

// Everything a check may read, computed once per graph.
struct CheckInputs {
  const Graph* graph = nullptr;
  DegreeProfile profile;
  InvariantReport report;
  GraphClassification classification;
  std::optional<SpectralResult> spectral;
};

CheckInputs prepare_inputs(const Graph& g, bool with_spectral = true,
                           double spectral_tolerance = kDefaultSpectralTolerance,
                           std::size_t spectral_max_iterations = kDefaultSpectralMaxIterations);

struct CheckResult {
  std::string check_id;
  std::string graph_label;
  bool applicable = true;
  // Normalised so that the inequality reads lhs <= rhs; slack = rhs - lhs.
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::optional<Rational> exact_lhs;  // set for exact rows
  std::optional<Rational> exact_rhs;
  bool holds = true;
  bool equality_achieved = false;
  bool expected_equality = false;
};

struct Tolerances {
  // Real rows hold when slack >= -hold * max(|lhs|, |rhs|, 1).
  double hold = 1e-9;
  // Real rows reach equality when |slack| <= equality * max(|lhs|, |rhs|, 1).
  double equality = 1e-7;
  // Rows that read rho widen both bounds to at least this multiple of the
  // power-iteration residual.
  double residual_factor = 10.0;
};

class UnknownCheckError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All registry rows in registry order.
std::span<const CheckDescriptor> check_registry();
const CheckDescriptor& find_check(const std::string& id);

/// Evaluates one row. A row whose guard fails comes back with
/// applicable == false. Throws UnknownCheckError for an unknown id and
/// std::invalid_argument when a spectral row is evaluated without a spectral
/// result.
CheckResult evaluate_check(const std::string& id, const CheckInputs& inputs,
                           const std::string& graph_label = "", const Tolerances& tol = {});

struct SuiteOptions {
  Tolerances tolerances;
  bool spectral = true;
  double spectral_tolerance = kDefaultSpectralTolerance;
  std::size_t spectral_max_iterations = kDefaultSpectralMaxIterations;
  // Test hook: the named row is reported as violated.
  std::string corrupt_check;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

struct SuiteReport {
  std::string graph_label;
  std::vector<CheckResult> results;  // sorted by check id

  /// Applicable rows whose inequality failed.
  std::vector<const CheckResult*> defects() const;
};

SuiteReport run_suite(const Graph& g, const std::string& label = "",
                      const SuiteOptions& options = {});

struct CheckAudit {
  std::string check_id;
  std::size_t evaluated = 0;        // applicable evaluations
  std::size_t violations = 0;       // holds == false
  std::size_t class_members = 0;    // applicable graphs inside the equality class
  std::size_t class_equalities = 0;
  std::size_t equalities_outside = 0;
  std::vector<std::string> violation_labels;
  std::vector<std::string> sufficiency_failures;  // class member without equality
  std::vector<std::string> necessity_failures;    // exact iff row, equality outside the class
  std::vector<std::string> observations;          // real iff row, near equality outside the class
};

struct EqualityAudit {
  std::vector<SuiteReport> reports;           // sorted by graph label
  std::map<std::string, CheckAudit> checks;   // keyed by check id

  bool has_violations() const;
  bool has_sufficiency_failures() const;
  bool has_necessity_failures() const;
  /// True when every row holds everywhere and every equality claim is confirmed.
  bool clean() const;
};

EqualityAudit verify_equality_classes(std::span<const LabeledGraph> corpus,
                                      const SuiteOptions& options = {});

}  // namespace zagreb
