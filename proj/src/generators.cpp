#include "zagreb/generators.hpp"

#include "zagreb/random.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <queue>
#include <set>

namespace zagreb {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw GeneratorError(message);
}

Graph from_list(std::size_t n, const std::vector<Edge>& edges) {
  return Graph::from_edges(n, edges);
}

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::kCycle, "cycle"},
    {Family::kPath, "path"},
    {Family::kComplete, "complete"},
    {Family::kStar, "star"},
    {Family::kCompleteBipartite, "complete_bipartite"},
    {Family::kWheel, "wheel"},
    {Family::kCompleteSplit, "complete_split"},
    {Family::kCompleteMultipartite, "complete_multipartite"},
    {Family::kRegularRandom, "regular_random"},
    {Family::kSubdividedComplete, "subdivided_complete"},
    {Family::kDendrimer, "dendrimer"},
}};

bool is_connected(std::size_t n, const std::set<Edge>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& current,
                const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (remaining == 0) {
    emit(current);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, emit);
    current.pop_back();
  }
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string_view family_name(Family f) {
  for (auto [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (auto [family, n] : kFamilyNames) {
    if (n == name) return family;
  }
  return std::nullopt;
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(ordered(i, (i + 1) % n));
  return from_list(n, edges);
}

Graph path_graph(std::size_t n) {
  require(n >= 3, "path needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({Vertex(i), Vertex(i + 1)});
  return from_list(n, edges);
}

Graph complete_graph(std::size_t n) {
  require(n >= 3, "complete graph needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({Vertex(i), Vertex(j)});
  return from_list(n, edges);
}

Graph star_graph(std::size_t n) {
  require(n >= 3, "star needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({0, Vertex(i)});
  return from_list(n, edges);
}

Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  require(p >= 1 && q >= 1 && p + q >= 3, "complete bipartite needs p,q >= 1 and p+q >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) edges.push_back({Vertex(i), Vertex(p + j)});
  return from_list(p + q, edges);
}

Graph wheel_graph(std::size_t n) {
  require(n >= 5, "wheel needs n >= 5");
  std::vector<Edge> edges;
  const std::size_t rim = n - 1;
  for (std::size_t i = 0; i < rim; ++i) {
    edges.push_back({0, Vertex(1 + i)});
    edges.push_back(ordered(1 + i, 1 + (i + 1) % rim));
  }
  return from_list(n, edges);
}

Graph complete_split_graph(std::size_t n, std::size_t p) {
  require(n >= 3 && p >= 1 && p < n, "complete split graph needs n >= 3 and 1 <= p < n");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({Vertex(i), Vertex(j)});
  }
  return from_list(n, edges);
}

Graph complete_multipartite_graph(std::span<const std::size_t> parts) {
  require(parts.size() >= 2, "complete multipartite graph needs at least two parts");
  std::vector<std::size_t> part_of;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    require(parts[k] >= 1, "parts must be nonempty");
    part_of.insert(part_of.end(), parts[k], k);
  }
  const std::size_t n = part_of.size();
  require(n >= 3, "complete multipartite graph needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) edges.push_back({Vertex(i), Vertex(j)});
  return from_list(n, edges);
}

Graph subdivided_complete_graph(std::size_t n) {
  require(n >= 3, "subdivided complete graph needs n >= 3");
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({Vertex(i), next});
      edges.push_back({Vertex(j), next});
      ++next;
    }
  }
  return from_list(next, edges);
}

Graph random_regular_graph(std::size_t n, std::size_t degree, std::uint64_t seed) {
  require(n >= 3 && degree >= 2 && degree < n && (n * degree) % 2 == 0,
          "regular graph needs n >= 3, 2 <= R < n and n*R even");
  std::set<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 1; k <= degree / 2; ++k) edges.insert(ordered(i, (i + k) % n));
    if (degree % 2 == 1) edges.insert(ordered(i, (i + n / 2) % n));
  }
  Rng rng(seed);
  std::vector<Edge> list(edges.begin(), edges.end());
  const std::size_t rounds = 10 * list.size();
  std::size_t attempts = 0;
  // Keep swapping until the budget is spent and the result is connected.
  while (attempts < rounds || !is_connected(n, edges)) {
    ++attempts;
    const std::size_t i = rng.below(list.size());
    const std::size_t j = rng.below(list.size());
    if (i == j) continue;
    Edge a = list[i], b = list[j];
    if (rng.below(2) == 1) std::swap(b.u, b.v);
    Vertex x = a.u, y = a.v, z = b.u, w = b.v;
    // (x,y),(z,w) -> (x,z),(y,w)
    if (x == z || y == w) continue;
    const Edge e1 = ordered(x, z), e2 = ordered(y, w);
    if (edges.count(e1) || edges.count(e2)) continue;
    edges.erase(list[i]);
    edges.erase(list[j]);
    edges.insert(e1);
    edges.insert(e2);
    list[i] = e1;
    list[j] = e2;
  }
  return from_list(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph dendrimer(std::size_t max_degree) {
  require(max_degree >= 2, "dendrimer needs maximum degree >= 2");
  std::vector<Edge> edges;
  // (vertex, degree it must reach)
  std::queue<std::pair<Vertex, std::size_t>> pending;
  Vertex next = 1;
  for (std::size_t c = 0; c < max_degree; ++c) {
    edges.push_back({0, next});
    pending.push({next++, max_degree - 1});
  }
  while (!pending.empty()) {
    auto [v, d] = pending.front();
    pending.pop();
    if (d <= 1) continue;
    for (std::size_t c = 0; c + 1 < d; ++c) {
      edges.push_back({v, next});
      pending.push({next++, d - 1});
    }
  }
  return from_list(next, edges);
}

Graph make_family(Family family, std::span<const std::size_t> params, std::uint64_t seed) {
  auto arity = [&](std::size_t k) {
    require(params.size() == k, std::string(family_name(family)) + " takes " + std::to_string(k) +
                                    " parameter(s)");
  };
  switch (family) {
    case Family::kCycle: arity(1); return cycle_graph(params[0]);
    case Family::kPath: arity(1); return path_graph(params[0]);
    case Family::kComplete: arity(1); return complete_graph(params[0]);
    case Family::kStar: arity(1); return star_graph(params[0]);
    case Family::kCompleteBipartite: arity(2); return complete_bipartite_graph(params[0], params[1]);
    case Family::kWheel: arity(1); return wheel_graph(params[0]);
    case Family::kCompleteSplit: arity(2); return complete_split_graph(params[0], params[1]);
    case Family::kCompleteMultipartite: return complete_multipartite_graph(params);
    case Family::kRegularRandom: arity(2); return random_regular_graph(params[0], params[1], seed);
    case Family::kSubdividedComplete: arity(1); return subdivided_complete_graph(params[0]);
    case Family::kDendrimer: arity(1); return dendrimer(params[0]);
  }
  throw GeneratorError("unknown family");
}

Graph random_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
  require(n >= 3, "random graph needs n >= 3");
  require(m >= n - 1 && m <= n * (n - 1) / 2,
          "infeasible edge count " + std::to_string(m) + " for n = " + std::to_string(n));
  Rng rng(seed);

  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> remaining(n, 1);
  for (Vertex c : code) ++remaining[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (remaining[v] == 1) leaves.push(v);
  std::set<Edge> edges;
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.insert(ordered(leaf, c));
    if (--remaining[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.insert(ordered(a, leaves.top()));

  std::size_t extra = m - (n - 1);
  const std::size_t pairs = n * (n - 1) / 2;
  if (pairs <= 4'000'000 || 2 * m > pairs) {
    std::vector<Edge> candidates;
    candidates.reserve(pairs - (n - 1));
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (!edges.count({i, j})) candidates.push_back({i, j});
    for (std::size_t k = 0; k < extra; ++k) {
      const std::size_t pick = k + rng.below(candidates.size() - k);
      std::swap(candidates[k], candidates[pick]);
      edges.insert(candidates[k]);
    }
  } else {
    while (extra > 0) {
      const Vertex i = static_cast<Vertex>(rng.below(n));
      const Vertex j = static_cast<Vertex>(rng.below(n));
      if (i == j) continue;
      if (edges.insert(ordered(i, j)).second) --extra;
    }
  }
  return from_list(n, std::vector<Edge>(edges.begin(), edges.end()));
}

std::vector<Graph> all_connected_graphs(std::size_t n) {
  require(n >= 3 && n <= 7, "exhaustive enumeration supports 3 <= n <= 7");
  std::vector<Edge> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<Graph> out;
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < n - 1) continue;
    edges.clear();
    std::set<Edge> s;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) {
        edges.push_back(pairs[k]);
        s.insert(pairs[k]);
      }
    }
    if (!is_connected(n, s)) continue;
    out.push_back(from_list(n, edges));
  }
  return out;
}

std::vector<LabeledGraph> generate_corpus(const CorpusSpec& spec) {
  std::vector<LabeledGraph> out;
  auto add = [&](std::string label, Graph g) { out.push_back({std::move(label), std::move(g)}); };
  for (const FamilyRequest& req : spec.families) {
    const std::string name(family_name(req.family));
    for (std::size_t n = req.min_size; n <= req.max_size; ++n) {
      const std::string tag = name + "(" + std::to_string(n);
      switch (req.family) {
        case Family::kCycle:
          if (n >= 3) add(tag + ")", cycle_graph(n));
          break;
        case Family::kPath:
          if (n >= 3) add(tag + ")", path_graph(n));
          break;
        case Family::kComplete:
          if (n >= 3) add(tag + ")", complete_graph(n));
          break;
        case Family::kStar:
          if (n >= 3) add(tag + ")", star_graph(n));
          break;
        case Family::kWheel:
          if (n >= 5) add(tag + ")", wheel_graph(n));
          break;
        case Family::kSubdividedComplete:
          if (n >= 3) add(tag + ")", subdivided_complete_graph(n));
          break;
        case Family::kDendrimer:
          if (n >= 2) add(tag + ")", dendrimer(n));
          break;
        case Family::kCompleteBipartite:
          for (std::size_t p = 1; 2 * p <= n; ++p) {
            if (n >= 3) {
              add(name + "(" + std::to_string(p) + "," + std::to_string(n - p) + ")",
                  complete_bipartite_graph(p, n - p));
            }
          }
          break;
        case Family::kCompleteSplit:
          for (std::size_t p = 1; p < n && n >= 3; ++p) {
            add(tag + "," + std::to_string(p) + ")", complete_split_graph(n, p));
          }
          break;
        case Family::kCompleteMultipartite: {
          // Three or more parts; two parts are the complete bipartite family.
          std::vector<std::size_t> current;
          partitions(n, n, current, [&](const std::vector<std::size_t>& parts) {
            if (parts.size() >= 3 && n >= 3) {
              std::vector<std::size_t> ascending(parts.rbegin(), parts.rend());
              add(name + "(" + join_sizes(ascending) + ")", complete_multipartite_graph(ascending));
            }
          });
          break;
        }
        case Family::kRegularRandom:
          for (std::size_t r = 3; r < n && r <= 6; ++r) {
            if ((n * r) % 2 != 0) continue;
            const std::uint64_t seed = spec.seed * 1000003u + n * 101u + r;
            add(tag + "," + std::to_string(r) + ")", random_regular_graph(n, r, seed));
          }
          break;
      }
    }
  }

  if (spec.random_count > 0) {
    require(spec.random_min_n >= 3 && spec.random_min_n <= spec.random_max_n,
            "random size range must satisfy 3 <= min <= max");
    Rng stream(spec.seed);
    for (std::size_t k = 0; k < spec.random_count; ++k) {
      const std::size_t n = stream.between(spec.random_min_n, spec.random_max_n);
      const std::size_t max_extra = n * (n - 1) / 2 - (n - 1);
      // Alternate between the full density range and sparse, near-tree graphs.
      const std::size_t cap = (stream.below(2) == 0) ? max_extra : std::min(max_extra, n);
      const std::size_t m = n - 1 + stream.between(0, cap);
      const std::uint64_t seed = stream.next();
      add("random(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")#" + std::to_string(k),
          random_connected(n, m, seed));
    }
  }
  return out;
}

CorpusSpec default_corpus_spec(std::uint64_t seed, std::size_t random_count) {
  CorpusSpec spec;
  spec.families = {
      {Family::kCycle, 3, 12},
      {Family::kPath, 3, 12},
      {Family::kComplete, 3, 8},
      {Family::kStar, 3, 12},
      {Family::kCompleteBipartite, 3, 12},
      {Family::kWheel, 5, 12},
      {Family::kCompleteSplit, 3, 10},
      {Family::kCompleteMultipartite, 3, 9},
      {Family::kRegularRandom, 4, 16},
      {Family::kSubdividedComplete, 3, 6},
      {Family::kDendrimer, 2, 5},
  };
  spec.random_count = random_count;
  spec.random_min_n = 3;
  spec.random_max_n = 24;
  spec.seed = seed;
  return spec;
}

}  // namespace zagreb
