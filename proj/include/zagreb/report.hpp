#pragma once

#include "zagreb/classify.hpp"
#include "zagreb/fullerene.hpp"
#include "zagreb/inequalities.hpp"
#include "zagreb/invariants.hpp"
#include "zagreb/spectral.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zagreb {

enum class TableFormat { kCsv, kTsv };

/// Accepts "csv" or "tsv"; throws std::invalid_argument otherwise.
TableFormat table_format_from_name(std::string_view name);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// CSV quotes fields holding commas, quotes or newlines; TSV replaces tabs
  /// and newlines inside fields with spaces. Ends with a newline.
  std::string render(TableFormat format) const;
};

/// Shortest round-trip-safe rendering limited to 12 significant digits.
std::string format_real(double value);

Table invariants_table();
void add_invariants_row(Table& t, const std::string& graph_id, const InvariantReport& r,
                        const std::optional<SpectralResult>& spectral);

Table classification_table();
void add_classification_row(Table& t, const std::string& graph_id, std::size_t n, std::size_t m,
                            const GraphClassification& c);

Table audit_table();
void add_audit_rows(Table& t, const SuiteReport& report);

/// One row per row id: evaluated, violations, class members, equalities and
/// failures across an audit.
Table audit_summary_table(const EqualityAudit& audit);

Table fullerene_table();
void add_fullerene_row(Table& t, const std::string& label, const FullereneDualReport& r);

}  // namespace zagreb
