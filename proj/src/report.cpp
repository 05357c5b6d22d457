#include "zagreb/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace zagreb {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string tsv_field(std::string s) {
  for (char& c : s) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

TableFormat table_format_from_name(std::string_view name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "tsv") return TableFormat::kTsv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv or tsv)");
}

std::string Table::render(TableFormat format) const {
  std::string out;
  auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += format == TableFormat::kCsv ? ',' : '\t';
      out += format == TableFormat::kCsv ? csv_field(fields[i]) : tsv_field(fields[i]);
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Table invariants_table() {
  return {{"graph_id", "n", "m", "max_degree", "min_degree", "M1", "M2", "F", "Irr", "IRL", "IRF", "IRM", "VAR",
           "X", "H", "rho", "IRF_decimal", "IRM_decimal", "VAR_decimal", "H_decimal"},
          {}};
}

void add_invariants_row(Table& t, const std::string& graph_id, const InvariantReport& r,
                        const std::optional<SpectralResult>& spectral) {
  t.rows.push_back({graph_id, std::to_string(r.n), std::to_string(r.m), std::to_string(r.max_degree),
                    std::to_string(r.min_degree), to_string(r.m1), to_string(r.m2), to_string(r.forgotten),
                    to_string(r.irr), to_string(r.irl), to_fraction_string(r.irf), to_fraction_string(r.irm),
                    to_fraction_string(r.var), format_real(r.sum_connectivity), to_fraction_string(r.harmonic),
                    spectral ? format_real(spectral->rho) : "", to_decimal_string(r.irf, 6),
                    to_decimal_string(r.irm, 6), to_decimal_string(r.var, 6), to_decimal_string(r.harmonic, 6)});
}

Table classification_table() { return {{"graph_id", "n", "m", "classes"}, {}}; }

void add_classification_row(Table& t, const std::string& graph_id, std::size_t n, std::size_t m,
                            const GraphClassification& c) {
  t.rows.push_back({graph_id, std::to_string(n), std::to_string(m), join(class_tags(c), ",")});
}

Table audit_table() {
  return {{"graph_id", "check_id", "lhs", "rhs", "slack", "holds", "equality", "expected_equality", "applicable"},
          {}};
}

void add_audit_rows(Table& t, const SuiteReport& report) {
  for (const CheckResult& r : report.results) {
    if (!r.applicable) {
      t.rows.push_back({report.graph_label, r.check_id, "", "", "", "", "", "", "false"});
      continue;
    }
    const bool exact = r.exact_lhs.has_value();
    t.rows.push_back({report.graph_label, r.check_id, exact ? to_fraction_string(*r.exact_lhs) : format_real(r.lhs),
                      exact ? to_fraction_string(*r.exact_rhs) : format_real(r.rhs),
                      exact ? to_fraction_string(*r.exact_rhs - *r.exact_lhs) : format_real(r.slack), flag(r.holds),
                      flag(r.equality_achieved), flag(r.expected_equality), "true"});
  }
}

Table audit_summary_table(const EqualityAudit& audit) {
  Table t{{"check_id", "evaluated", "violations", "class_members", "class_equalities", "equalities_outside",
           "sufficiency_failures", "necessity_failures", "observations"},
          {}};
  for (const auto& [id, a] : audit.checks) {
    t.rows.push_back({id, std::to_string(a.evaluated), std::to_string(a.violations),
                      std::to_string(a.class_members), std::to_string(a.class_equalities),
                      std::to_string(a.equalities_outside), std::to_string(a.sufficiency_failures.size()),
                      std::to_string(a.necessity_failures.size()), std::to_string(a.observations.size())});
  }
  return t;
}

Table fullerene_table() {
  return {{"label", "k", "np", "irld", "irmd_exact", "irmd_3dp", "eq16", "eq17", "eq18"}, {}};
}

void add_fullerene_row(Table& t, const std::string& label, const FullereneDualReport& r) {
  t.rows.push_back({label, std::to_string(r.k), std::to_string(r.np), to_string(r.irld), to_fraction_string(r.irmd),
                    to_decimal_string(r.irmd, 3), flag(r.eq16ok), flag(r.eq17ok), flag(r.eq18ok)});
}

}  // namespace zagreb
