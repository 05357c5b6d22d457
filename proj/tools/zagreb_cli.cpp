// Command-line front end: invariants, classification, inequality audits,
// generators, fullerene dual reports and correlation.

#include "zagreb/classify.hpp"
#include "zagreb/fullerene.hpp"
#include "zagreb/generators.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/inequalities.hpp"
#include "zagreb/invariants.hpp"
#include "zagreb/report.hpp"
#include "zagreb/spectral.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace zagreb;
namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write");
  out << text;
}

struct Common {
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out,-o", c.out, "Output file (default stdout)");
  app->add_option("--format", c.format, "Table format")->check(CLI::IsMember({"csv", "tsv"}));
}

// Reads every file, reporting failures on stderr. Returns false if any failed.
bool load_graphs(const std::vector<std::string>& files, std::vector<LabeledGraph>& out) {
  bool ok = true;
  for (const std::string& path : files) {
    try {
      out.push_back({path, parse_edge_list(read_file(path))});
    } catch (const std::exception& e) {
      std::cerr << path << ": " << e.what() << '\n';
      ok = false;
    }
  }
  return ok;
}

struct InvariantsCmd {
  Common common;
  std::vector<std::string> files;
  bool no_spectral = false;
  double spectral_tol = kDefaultSpectralTolerance;

  int run() const {
    if (files.empty()) throw UsageError("invariants: no graph files given");
    std::vector<LabeledGraph> graphs;
    const bool ok = load_graphs(files, graphs);
    Table t = invariants_table();
    for (const LabeledGraph& g : graphs) {
      std::optional<SpectralResult> rho;
      if (!no_spectral) rho = spectral_radius(g.graph, spectral_tol);
      add_invariants_row(t, g.label, invariant_report(g.graph), rho);
    }
    write_output(common.out, t.render(table_format_from_name(common.format)));
    return ok ? 0 : 1;
  }
};

struct ClassifyCmd {
  Common common;
  std::vector<std::string> files;

  int run() const {
    if (files.empty()) throw UsageError("classify: no graph files given");
    std::vector<LabeledGraph> graphs;
    const bool ok = load_graphs(files, graphs);
    Table t = classification_table();
    for (const LabeledGraph& g : graphs) {
      add_classification_row(t, g.label, g.graph.order(), g.graph.size(), classify(g.graph));
    }
    write_output(common.out, t.render(table_format_from_name(common.format)));
    return ok ? 0 : 1;
  }
};

struct VerifyCmd {
  Common common;
  std::vector<std::string> files;
  std::optional<std::uint64_t> seed;
  bool corpus_default = false;
  std::vector<std::string> corpus_families;
  std::size_t corpus_min = 3;
  std::size_t corpus_max = 10;
  std::size_t corpus_random = 0;
  std::size_t corpus_random_min_n = 3;
  std::size_t corpus_random_max_n = 24;
  double tol = Tolerances{}.hold;
  double eq_tol = Tolerances{}.equality;
  std::size_t threads = 0;
  std::string summary;
  std::string corrupt;

  int run() const {
    std::vector<LabeledGraph> corpus;
    bool ok = load_graphs(files, corpus);
    const bool wants_corpus = corpus_default || !corpus_families.empty() || corpus_random > 0;
    if (files.empty() && !wants_corpus) throw UsageError("verify: give graph files or --corpus-* options");
    if (wants_corpus) {
      CorpusSpec spec;
      if (corpus_default) {
        if (!seed) throw UsageError("verify: --seed is required for the default corpus");
        spec = default_corpus_spec(*seed, corpus_random ? corpus_random : 5000);
      } else {
        for (const std::string& name : corpus_families) {
          const auto family = family_from_name(name);
          if (!family) throw UsageError("verify: unknown family '" + name + "'");
          spec.families.push_back({*family, corpus_min, corpus_max});
        }
        spec.random_count = corpus_random;
        if ((corpus_random > 0 || std::find(corpus_families.begin(), corpus_families.end(), "regular_random") !=
                                      corpus_families.end()) &&
            !seed) {
          throw UsageError("verify: --seed is required for random graphs");
        }
        spec.seed = seed.value_or(0);
      }
      spec.random_min_n = corpus_random_min_n;
      spec.random_max_n = corpus_random_max_n;
      auto generated = generate_corpus(spec);
      corpus.insert(corpus.end(), std::make_move_iterator(generated.begin()),
                    std::make_move_iterator(generated.end()));
    }

    SuiteOptions options;
    options.tolerances.hold = tol;
    options.tolerances.equality = eq_tol;
    options.threads = threads;
    options.corrupt_check = corrupt;
    const EqualityAudit audit = verify_equality_classes(corpus, options);

    Table t = audit_table();
    for (const SuiteReport& r : audit.reports) add_audit_rows(t, r);
    const TableFormat format = table_format_from_name(common.format);
    write_output(common.out, t.render(format));
    if (!summary.empty()) write_output(summary, audit_summary_table(audit).render(format));

    for (const auto& [id, a] : audit.checks) {
      for (const std::string& label : a.violation_labels) std::cerr << "violation: " << id << " on " << label << '\n';
      for (const std::string& label : a.sufficiency_failures) {
        std::cerr << "missing equality: " << id << " on " << label << '\n';
      }
      for (const std::string& label : a.necessity_failures) {
        std::cerr << "equality outside class: " << id << " on " << label << '\n';
      }
    }
    std::cerr << corpus.size() << " graphs, " << audit.checks.size() << " checks: "
              << (audit.has_violations() || audit.has_sufficiency_failures() ? "FAILED" : "ok") << '\n';
    if (audit.has_violations() || audit.has_sufficiency_failures()) ok = false;
    return ok ? 0 : 1;
  }
};

struct GenerateCmd {
  std::string out;
  std::string family;
  std::vector<std::size_t> params;
  std::optional<std::uint64_t> seed;

  int run() const {
    Graph g = [&] {
      if (family == "random") {
        if (params.size() != 2) throw UsageError("generate random takes n and m");
        if (!seed) throw UsageError("generate random: --seed is required");
        return random_connected(params[0], params[1], *seed);
      }
      const auto f = family_from_name(family);
      if (!f) throw UsageError("generate: unknown family '" + family + "'");
      if (*f == Family::kRegularRandom && !seed) throw UsageError("generate regular_random: --seed is required");
      return make_family(*f, params, seed.value_or(0));
    }();
    write_output(out, serialize_edge_list(g) + "\n");
    return 0;
  }
};

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

std::string scatter(const std::vector<std::pair<double, double>>& points, const std::string& header) {
  std::string s = "# " + header + "\n";
  for (const auto& [x, y] : points) s += format_real(x) + ' ' + format_real(y) + '\n';
  return s;
}

struct FullereneCmd {
  Common common;
  std::vector<std::string> spiral_files;
  std::vector<std::string> embedding_files;
  std::string energies;
  std::string index = "irmd";
  std::string scatter_dir;

  int run() const {
    if (spiral_files.empty() && embedding_files.empty()) {
      throw UsageError("fullerene: give --spiral or --embedding files");
    }
    bool ok = true;
    std::vector<std::pair<std::string, FullereneDualReport>> reports;
    for (const std::string& path : spiral_files) {
      const std::string text = read_file(path);
      std::istringstream lines(text);
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(lines, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (line.substr(0, hash).find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
          const SpiralEntry entry = parse_spiral_line(line.substr(0, hash));
          const auto sizes = spiral_face_sizes(entry.k, entry.pentagons);
          const SpiralDecode decoded = decode_spiral(sizes);
          if (!decoded.ok()) throw FullereneError("spiral " + entry.label + " does not close: " + decoded.failure);
          reports.emplace_back(entry.label, fullerene_report(*decoded.dual, entry.k));
        } catch (const std::exception& e) {
          std::cerr << path << ": line " << line_no << ": " << e.what() << '\n';
          ok = false;
        }
      }
    }
    for (const std::string& path : embedding_files) {
      try {
        const PlanarEmbedding e = parse_embedding(read_file(path));
        reports.emplace_back(stem(path), fullerene_report(dual_graph(e), e.order()));
      } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << '\n';
        ok = false;
      }
    }
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    Table t = fullerene_table();
    for (const auto& [label, r] : reports) {
      add_fullerene_row(t, label, r);
      if (!r.eq16ok || !r.eq17ok || !r.eq18ok) ok = false;
    }
    std::string text = t.render(table_format_from_name(common.format));

    if (!scatter_dir.empty()) {
      fs::create_directories(scatter_dir);
      std::vector<std::pair<double, double>> pts;
      for (const auto& [label, r] : reports) pts.emplace_back(to_double(r.irld), to_double(r.irmd));
      write_output((fs::path(scatter_dir) / "irld_irmd.dat").string(), scatter(pts, "irld irmd"));
    }
    if (!energies.empty()) {
      if (index != "irld" && index != "irmd") throw UsageError("fullerene: --index must be irld or irmd");
      const auto rows = parse_energy_csv(read_file(energies));
      std::vector<std::pair<std::string, double>> values;
      for (const auto& [label, r] : reports) {
        values.emplace_back(label, index == "irld" ? to_double(r.irld) : to_double(r.irmd));
      }
      const CorrelationReport c = correlate(values, rows);
      text += "# correlation of energy on " + index + ": slope=" + format_real(c.slope) +
              " intercept=" + format_real(c.intercept) + " r2=" + format_real(c.r_squared) + "\n";
      for (const std::string& label : c.unmatched) text += "# unmatched: " + label + "\n";
      if (!scatter_dir.empty()) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : c.pairs) pts.emplace_back(p.index, p.energy);
        write_output((fs::path(scatter_dir) / (index + "_energy.dat")).string(), scatter(pts, index + " energy"));
      }
    }
    write_output(common.out, text);
    return ok ? 0 : 1;
  }
};

struct CorrelateCmd {
  std::string out;
  std::string values;
  std::string energies;

  int run() const {
    // Values use the energy file layout with the second column holding the index.
    std::string text = read_file(values);
    const auto nl = text.find('\n');
    if (nl == std::string::npos) throw UsageError("correlate: values file has no rows");
    const auto rows = parse_energy_csv("label,energy" + text.substr(nl));
    std::vector<std::pair<std::string, double>> pairs;
    for (const EnergyRow& r : rows) pairs.emplace_back(r.label, r.energy);
    const CorrelationReport c = correlate(pairs, parse_energy_csv(read_file(energies)));
    std::string s = "slope,intercept,r2,matched,unmatched\n" + format_real(c.slope) + ',' + format_real(c.intercept) +
                    ',' + format_real(c.r_squared) + ',' + std::to_string(c.pairs.size()) + ',' +
                    std::to_string(c.unmatched.size()) + '\n';
    write_output(out, s);
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-based topological indices, irregularity measures and inequality audits"};
  app.require_subcommand(1);

  InvariantsCmd inv;
  auto* inv_app = app.add_subcommand("invariants", "Index report per edge-list file");
  add_common(inv_app, inv.common);
  inv_app->add_option("files", inv.files, "Edge-list files");
  inv_app->add_flag("--no-spectral", inv.no_spectral, "Leave the rho column empty");
  inv_app->add_option("--spectral-tol", inv.spectral_tol, "Power-iteration residual tolerance");

  ClassifyCmd cls;
  auto* cls_app = app.add_subcommand("classify", "Structural class tags per edge-list file");
  add_common(cls_app, cls.common);
  cls_app->add_option("files", cls.files, "Edge-list files");

  VerifyCmd ver;
  auto* ver_app = app.add_subcommand("verify", "Audit every inequality on files or a generated corpus");
  add_common(ver_app, ver.common);
  ver_app->add_option("files", ver.files, "Edge-list files");
  ver_app->add_option("--seed", ver.seed, "Seed for random graphs");
  ver_app->add_flag("--corpus-default", ver.corpus_default, "All families plus random graphs");
  ver_app->add_option("--corpus-family", ver.corpus_families, "Family to include (repeatable)");
  ver_app->add_option("--corpus-min", ver.corpus_min, "Smallest family size");
  ver_app->add_option("--corpus-max", ver.corpus_max, "Largest family size");
  ver_app->add_option("--corpus-random", ver.corpus_random, "Number of random connected graphs");
  ver_app->add_option("--corpus-random-min-n", ver.corpus_random_min_n, "Smallest random graph order");
  ver_app->add_option("--corpus-random-max-n", ver.corpus_random_max_n, "Largest random graph order");
  ver_app->add_option("--tol", ver.tol, "Relative tolerance for real inequalities");
  ver_app->add_option("--eq-tol", ver.eq_tol, "Relative tolerance for real equalities");
  ver_app->add_option("--threads", ver.threads, "Worker threads (0 = all cores)");
  ver_app->add_option("--summary", ver.summary, "Write per-check totals to this file");
  ver_app->add_option("--inject-fault", ver.corrupt, "Report the named check as violated")->group("");

  GenerateCmd gen;
  auto* gen_app = app.add_subcommand("generate", "Write one generated graph as an edge list");
  gen_app->add_option("family", gen.family, "Family name, or 'random' for n m")->required();
  gen_app->add_option("params", gen.params, "Family parameters");
  gen_app->add_option("--seed", gen.seed, "Seed for random families");
  gen_app->add_option("--out,-o", gen.out, "Output file (default stdout)");

  FullereneCmd ful;
  auto* ful_app = app.add_subcommand("fullerene", "Dual reports for fullerene isomers");
  add_common(ful_app, ful.common);
  ful_app->add_option("--spiral", ful.spiral_files, "Spiral file(s): label k p1 .. p12");
  ful_app->add_option("--embedding", ful.embedding_files, "Rotation-system file(s): v: a b c");
  ful_app->add_option("--energies", ful.energies, "CSV with label,energy");
  ful_app->add_option("--index", ful.index, "Index correlated with energy")->check(CLI::IsMember({"irld", "irmd"}));
  ful_app->add_option("--scatter-dir", ful.scatter_dir, "Directory for two-column scatter data");

  CorrelateCmd cor;
  auto* cor_app = app.add_subcommand("correlate", "Least-squares fit of energies on index values");
  cor_app->add_option("--values", cor.values, "CSV with label,value")->required();
  cor_app->add_option("--energies", cor.energies, "CSV with label,energy")->required();
  cor_app->add_option("--out,-o", cor.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*inv_app) return inv.run();
    if (*cls_app) return cls.run();
    if (*ver_app) return ver.run();
    if (*gen_app) return gen.run();
    if (*ful_app) return ful.run();
    if (*cor_app) return cor.run();
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
