#include "zagreb/fullerene.hpp"

#include "zagreb/invariants.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace zagreb {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t slot_of(const PlanarEmbedding& e, Vertex v, Vertex neighbour) {
  const auto& r = e.rotation[v];
  for (std::size_t i = 0; i < 3; ++i) {
    if (r[i] == neighbour) return i;
  }
  throw FullereneError("rotation is not symmetric: " + std::to_string(neighbour) + " lists " +
                       std::to_string(v) + " but not the reverse");
}

void check_rotation(const PlanarEmbedding& e) {
  const std::size_t k = e.order();
  for (Vertex v = 0; v < k; ++v) {
    const auto& r = e.rotation[v];
    for (std::size_t i = 0; i < 3; ++i) {
      if (r[i] >= k) throw FullereneError("vertex " + std::to_string(v) + " has neighbour out of range");
      if (r[i] == v) throw FullereneError("self-loop on vertex " + std::to_string(v));
      if (r[i] == r[(i + 1) % 3]) {
        throw FullereneError("vertex " + std::to_string(v) + " lists a neighbour twice");
      }
      slot_of(e, r[i], v);
    }
  }
}

// Face index of every dart (v, slot).
std::vector<std::array<std::size_t, 3>> dart_faces(const PlanarEmbedding& e,
                                                   std::vector<std::vector<Vertex>>* faces) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::array<std::size_t, 3>> face_of(e.order(), {kUnset, kUnset, kUnset});
  std::size_t count = 0;
  for (Vertex start = 0; start < e.order(); ++start) {
    for (std::size_t s = 0; s < 3; ++s) {
      if (face_of[start][s] != kUnset) continue;
      std::vector<Vertex> walk;
      Vertex v = start;
      std::size_t slot = s;
      while (face_of[v][slot] == kUnset) {
        face_of[v][slot] = count;
        walk.push_back(v);
        const Vertex w = e.rotation[v][slot];
        slot = (slot_of(e, w, v) + 1) % 3;
        v = w;
      }
      if (v != start || slot != s) throw FullereneError("face traversal did not return to its start");
      if (faces) faces->push_back(std::move(walk));
      ++count;
    }
  }
  return face_of;
}

}  // namespace

void validate_fullerene(const PlanarEmbedding& e) {
  check_rotation(e);
  const std::size_t k = e.order();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) {
    for (Vertex w : e.rotation[v]) {
      if (v < w) edges.push_back({v, w});
    }
  }
  try {
    Graph::from_edges(k, edges);
  } catch (const GraphError& err) {
    throw FullereneError(std::string("embedding graph: ") + err.what());
  }
  const auto faces = trace_faces(e);
  std::size_t pentagons = 0;
  for (const auto& f : faces) {
    if (f.size() != 5 && f.size() != 6) throw FullereneError("face of size " + std::to_string(f.size()));
    if (f.size() == 5) ++pentagons;
  }
  if (pentagons != 12) throw FullereneError(std::to_string(pentagons) + " pentagons, expected 12");
  const long long euler = static_cast<long long>(k) - static_cast<long long>(edges.size()) +
                          static_cast<long long>(faces.size());
  if (euler != 2) throw FullereneError("Euler characteristic " + std::to_string(euler) + ", expected 2");
  if (k % 2 != 0 || k < 20) throw FullereneError("no fullerene has " + std::to_string(k) + " vertices");
  if (k == 22) throw FullereneError("no fullerene has 22 vertices");
}

PlanarEmbedding parse_embedding(std::string_view text) {
  std::map<std::uint64_t, std::array<std::uint64_t, 3>> rows;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = strip_comment(raw);
    if (line.empty()) continue;
    const std::string prefix = "line " + std::to_string(line_no) + ": ";
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw FullereneError(prefix + "expected 'v: a b c'");
    std::uint64_t v = 0;
    if (!parse_number(trim(line.substr(0, colon)), v)) throw FullereneError(prefix + "bad vertex id");
    const auto rest = tokens(line.substr(colon + 1));
    if (rest.size() != 3) {
      throw FullereneError(prefix + "vertex " + std::to_string(v) + " has " + std::to_string(rest.size()) +
                           " neighbours; fullerenes are cubic");
    }
    std::array<std::uint64_t, 3> nb{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!parse_number(rest[i], nb[i])) throw FullereneError(prefix + "bad neighbour id");
    }
    if (!rows.emplace(v, nb).second) throw FullereneError(prefix + "vertex " + std::to_string(v) + " repeated");
  }
  if (rows.empty()) throw FullereneError("empty embedding");
  std::map<std::uint64_t, Vertex> index;
  for (const auto& [v, nb] : rows) index.emplace(v, static_cast<Vertex>(index.size()));
  PlanarEmbedding e;
  e.rotation.resize(rows.size());
  for (const auto& [v, nb] : rows) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto it = index.find(nb[i]);
      if (it == index.end()) {
        throw FullereneError("vertex " + std::to_string(v) + " lists " + std::to_string(nb[i]) +
                             ", which has no rotation line");
      }
      e.rotation[index[v]][i] = it->second;
    }
  }
  validate_fullerene(e);
  return e;
}

std::string serialize_embedding(const PlanarEmbedding& e) {
  std::string out;
  for (Vertex v = 0; v < e.order(); ++v) {
    if (v) out += '\n';
    out += std::to_string(v) + ":";
    for (Vertex w : e.rotation[v]) out += " " + std::to_string(w);
  }
  return out;
}

std::vector<std::vector<Vertex>> trace_faces(const PlanarEmbedding& e) {
  check_rotation(e);
  std::vector<std::vector<Vertex>> faces;
  dart_faces(e, &faces);
  return faces;
}

Graph dual_graph(const PlanarEmbedding& e) {
  check_rotation(e);
  std::vector<std::vector<Vertex>> faces;
  const auto face_of = dart_faces(e, &faces);
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < e.order(); ++v) {
    for (std::size_t s = 0; s < 3; ++s) {
      const Vertex w = e.rotation[v][s];
      if (v > w) continue;
      auto a = static_cast<Vertex>(face_of[v][s]);
      auto b = static_cast<Vertex>(face_of[w][slot_of(e, w, v)]);
      if (a == b) throw FullereneError("edge " + std::to_string(v) + "-" + std::to_string(w) + " is a bridge");
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) throw FullereneError("two faces share more than one edge");
      edges.push_back({a, b});
    }
  }
  return Graph::from_edges(faces.size(), edges);
}

PlanarEmbedding primal_from_dual(const Graph& dual) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                       boost::property<boost::vertex_index_t, int>,
                                       boost::property<boost::edge_index_t, int>>;
  using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

  BGraph bg(dual.order());
  for (const Edge& e : dual.edges()) boost::add_edge(e.u, e.v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int next_index = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next_index++);

  std::vector<std::vector<BEdge>> embedding(dual.order());
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = &embedding[0])) {
    throw FullereneError("dual graph is not planar");
  }

  struct Collector : public boost::planar_face_traversal_visitor {
    std::vector<std::vector<int>> faces;
    decltype(edge_index) index;
    explicit Collector(decltype(edge_index) i) : index(i) {}
    void begin_face() { faces.emplace_back(); }
    void next_edge(BEdge e) { faces.back().push_back(boost::get(index, e)); }
  } collector(edge_index);
  boost::planar_face_traversal(bg, &embedding[0], collector);

  std::vector<std::vector<std::size_t>> faces_of_edge(dual.size());
  for (std::size_t f = 0; f < collector.faces.size(); ++f) {
    if (collector.faces[f].size() != 3) throw FullereneError("dual graph is not a triangulation");
    for (int e : collector.faces[f]) faces_of_edge[static_cast<std::size_t>(e)].push_back(f);
  }
  PlanarEmbedding primal;
  primal.rotation.resize(collector.faces.size());
  for (std::size_t f = 0; f < collector.faces.size(); ++f) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& pair = faces_of_edge[static_cast<std::size_t>(collector.faces[f][i])];
      if (pair.size() != 2) throw FullereneError("dual graph is not a triangulation");
      primal.rotation[f][i] = static_cast<Vertex>(pair[0] == f ? pair[1] : pair[0]);
    }
  }
  check_rotation(primal);
  return primal;
}

std::vector<int> spiral_face_sizes(std::size_t k, std::span<const std::size_t> pentagons) {
  if (k % 2 != 0 || k < 4) throw FullereneError("vertex count " + std::to_string(k) + " is not valid");
  std::vector<int> sizes(k / 2 + 2, 6);
  for (std::size_t p : pentagons) {
    if (p < 1 || p > sizes.size()) {
      throw FullereneError("pentagon position " + std::to_string(p) + " outside 1.." +
                           std::to_string(sizes.size()));
    }
    if (sizes[p - 1] == 5) throw FullereneError("pentagon position " + std::to_string(p) + " repeated");
    sizes[p - 1] = 5;
  }
  return sizes;
}

SpiralDecode decode_spiral(std::span<const int> face_sizes) {
  const std::size_t n = face_sizes.size();
  std::size_t pentagons = 0;
  for (int s : face_sizes) {
    if (s != 5 && s != 6) throw FullereneError("face size " + std::to_string(s) + " is not 5 or 6");
    if (s == 5) ++pentagons;
  }
  if (pentagons != 12) throw FullereneError(std::to_string(pentagons) + " pentagons in spiral, expected 12");
  const std::size_t k = 2 * (n - 2);
  if (k == 22) throw FullereneError("no fullerene has 22 vertices");

  SpiralDecode out;
  std::vector<int> open(face_sizes.begin(), face_sizes.end());
  std::set<Edge> edges;
  auto connect = [&](Vertex a, Vertex b) {
    if (a == b || !edges.insert({std::min(a, b), std::max(a, b)}).second) return false;
    return --open[a] >= 0 && --open[b] >= 0;
  };
  auto fail = [&](std::string why) {
    out.failure = std::move(why);
    return out;
  };

  // Boundary of the partial patch, in spiral order; the last face closes
  // back onto the first.
  std::deque<Vertex> ring{0, 1};
  if (!connect(0, 1)) return fail("spiral does not close");
  for (Vertex f = 2; f + 1 < n; ++f) {
    if (ring.size() < 2) return fail("boundary collapsed at face " + std::to_string(f + 1));
    if (!connect(f, ring.back()) || !connect(f, ring.front())) {
      return fail("face " + std::to_string(f + 1) + " cannot be attached");
    }
    for (;;) {
      if (ring.size() > 2 && open[ring.front()] == 0) {
        ring.pop_front();
        if (!connect(f, ring.front())) return fail("face " + std::to_string(f + 1) + " over-closes the boundary");
      } else if (ring.size() > 2 && open[ring.back()] == 0) {
        ring.pop_back();
        if (!connect(f, ring.back())) return fail("face " + std::to_string(f + 1) + " over-closes the boundary");
      } else {
        break;
      }
    }
    if (open[f] <= 0) return fail("face " + std::to_string(f + 1) + " closed before the end of the spiral");
    ring.push_back(f);
  }
  const Vertex last = static_cast<Vertex>(n - 1);
  if (ring.size() != static_cast<std::size_t>(face_sizes[last])) {
    return fail("last face meets " + std::to_string(ring.size()) + " open faces, needs " +
                std::to_string(face_sizes[last]));
  }
  for (Vertex v : ring) {
    if (!connect(last, v)) return fail("last face cannot close the boundary");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (open[v] != 0) return fail("face " + std::to_string(v + 1) + " left open");
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  out.dual = Graph::from_edges(n, list);
  return out;
}

std::size_t pentagon_adjacency(const Graph& dual) {
  for (Vertex v = 0; v < dual.order(); ++v) {
    const std::size_t d = dual.degree(v);
    if (d != 5 && d != 6) {
      throw FullereneError("vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                           "; dual fullerene degrees are 5 or 6");
    }
  }
  std::size_t np = 0;
  for (const Edge& e : dual.edges()) {
    if (dual.degree(e.u) == 5 && dual.degree(e.v) == 5) ++np;
  }
  return np;
}

Integer dual_irl_closed_form(std::size_t np) { return Integer(60) - 2 * Integer(np); }

Rational dual_irm_closed_form(std::size_t k, std::size_t np) {
  const Integer kk(k);
  return Rational(54 * kk + Integer(np) - 360) - Rational(54 * kk * kk * kk, (kk + 4) * (kk + 4));
}

FullereneDualReport fullerene_report(const Graph& dual, std::size_t k) {
  if (dual.order() != k / 2 + 2 || dual.size() != 3 * k / 2 || k % 2 != 0) {
    throw FullereneError("dual with " + std::to_string(dual.order()) + " vertices and " +
                         std::to_string(dual.size()) + " edges does not match k = " + std::to_string(k));
  }
  std::size_t fives = 0;
  for (Vertex v = 0; v < dual.order(); ++v) {
    if (dual.degree(v) == 5) ++fives;
  }
  FullereneDualReport r;
  r.k = k;
  r.np = pentagon_adjacency(dual);
  if (fives != 12) throw FullereneError(std::to_string(fives) + " degree-5 vertices, expected 12");
  const IrregularityIndices irr = irregularity_indices(dual);
  r.irr = albertson(dual);
  r.irld = irr.irl;
  r.irmd = irr.irm;
  r.eq16ok = r.irr == r.irld && r.irld == dual_irl_closed_form(r.np);
  r.eq17ok = r.irmd == dual_irm_closed_form(k, r.np);
  const Integer n(dual.order()), m(dual.size());
  const Rational rhs = Rational(forgotten_index(dual), 2) - Rational(4 * m * m * m, n * n) - Rational(r.irld, 2);
  r.eq18ok = r.irmd == rhs;
  return r;
}

SpiralEntry parse_spiral_line(std::string_view line) {
  const auto t = tokens(trim(line));
  if (t.size() != 14) {
    throw FullereneError("expected 'label k p1 ... p12', got " + std::to_string(t.size()) + " fields");
  }
  SpiralEntry e;
  e.label = std::string(t[0]);
  if (!parse_number(t[1], e.k)) throw FullereneError("bad vertex count '" + std::string(t[1]) + "'");
  for (std::size_t i = 0; i < 12; ++i) {
    if (!parse_number(t[i + 2], e.pentagons[i])) {
      throw FullereneError("bad pentagon position '" + std::string(t[i + 2]) + "'");
    }
  }
  spiral_face_sizes(e.k, e.pentagons);
  return e;
}

std::vector<SpiralEntry> parse_spiral_file(std::string_view text) {
  std::vector<SpiralEntry> out;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = strip_comment(raw);
    if (line.empty()) continue;
    try {
      out.push_back(parse_spiral_line(line));
    } catch (const FullereneError& err) {
      throw FullereneError("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return out;
}

std::vector<EnergyRow> parse_energy_csv(std::string_view text) {
  std::vector<EnergyRow> rows;
  std::size_t line_no = 0;
  bool header = false;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const std::string prefix = "line " + std::to_string(line_no) + ": ";
    if (!header) {
      if (line != "label,energy") throw FullereneError(prefix + "expected header 'label,energy'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw FullereneError(prefix + "expected 'label,energy'");
    }
    EnergyRow row;
    row.label = std::string(trim(line.substr(0, comma)));
    if (row.label.empty()) throw FullereneError(prefix + "empty label");
    const std::string value(trim(line.substr(comma + 1)));
    std::size_t used = 0;
    try {
      row.energy = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw FullereneError(prefix + "bad energy '" + value + "'");
    rows.push_back(std::move(row));
  }
  if (!header) throw FullereneError("missing header 'label,energy'");
  return rows;
}

std::string serialize_energy_csv(std::span<const EnergyRow> rows) {
  std::ostringstream out;
  out << "label,energy\n" << std::setprecision(17);
  for (const EnergyRow& r : rows) out << r.label << ',' << r.energy << '\n';
  return out.str();
}

CorrelationReport correlate(std::span<const std::pair<std::string, double>> values,
                            std::span<const EnergyRow> energies) {
  std::map<std::string, double> index, energy;
  for (const auto& [label, v] : values) {
    if (!index.emplace(label, v).second) throw CorrelationError("duplicate index label '" + label + "'");
  }
  for (const EnergyRow& r : energies) {
    if (!energy.emplace(r.label, r.energy).second) throw CorrelationError("duplicate energy label '" + r.label + "'");
  }
  CorrelationReport rep;
  for (const auto& [label, v] : index) {
    const auto it = energy.find(label);
    if (it == energy.end()) {
      rep.unmatched.push_back(label);
    } else {
      rep.pairs.push_back({label, v, it->second});
    }
  }
  for (const auto& [label, e] : energy) {
    if (!index.count(label)) rep.unmatched.push_back(label);
  }
  std::sort(rep.unmatched.begin(), rep.unmatched.end());
  if (rep.pairs.size() < 3) {
    throw CorrelationError(std::to_string(rep.pairs.size()) + " matched labels; at least 3 required");
  }
  const double count = static_cast<double>(rep.pairs.size());
  double mx = 0.0, my = 0.0;
  for (const auto& p : rep.pairs) {
    mx += p.index;
    my += p.energy;
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const auto& p : rep.pairs) {
    sxx += (p.index - mx) * (p.index - mx);
    syy += (p.energy - my) * (p.energy - my);
    sxy += (p.index - mx) * (p.energy - my);
  }
  if (sxx == 0.0) throw CorrelationError("degenerate: index values have zero variance");
  if (syy == 0.0) throw CorrelationError("degenerate: energy values have zero variance");
  rep.slope = sxy / sxx;
  rep.intercept = my - rep.slope * mx;
  rep.r_squared = std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  return rep;
}

}  // namespace zagreb
