#include "zagreb/classify.hpp"

#include <algorithm>
#include <set>

namespace zagreb {

GraphClassification classify(const Graph& g) {
  GraphClassification c;
  const std::size_t n = g.order();
  const std::size_t m = g.size();

  std::set<std::size_t> degrees;
  std::size_t max_d = 0, min_d = n;
  for (Vertex v = 0; v < n; ++v) {
    degrees.insert(g.degree(v));
    max_d = std::max(max_d, g.degree(v));
    min_d = std::min(min_d, g.degree(v));
  }
  c.distinct_degrees = degrees.size();
  const bool regular = degrees.size() == 1;
  if (regular) c.regular = max_d;
  if (degrees.size() == 2) c.bidegreed = std::make_pair(max_d, min_d);

  const auto parts = is_bipartite(g);
  c.bipartite = parts.has_value();
  c.triangle_free = is_triangle_free(g);
  c.complete = m == n * (n - 1) / 2;
  c.triangle = n == 3 && m == 3;

  std::set<std::size_t> differences;
  for (const Edge& e : g.edges()) {
    const std::size_t a = g.degree(e.u), b = g.degree(e.v);
    differences.insert(a > b ? a - b : b - a);
  }
  const std::size_t max_diff = *differences.rbegin();

  if (!regular && differences.size() == 1) c.weakly_semiregular = *differences.begin();
  c.nearly_regular = !regular && max_diff <= 1;
  c.weakly_irregular = differences.size() == 1 && *differences.begin() == 1;

  if (c.bidegreed && c.bipartite) {
    c.semiregular = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      return std::max(g.degree(e.u), g.degree(e.v)) == max_d &&
             std::min(g.degree(e.u), g.degree(e.v)) == min_d;
    });
  }

  if (!regular) {
    bool ok = true;
    for (Vertex a = 0; a < n && ok; ++a) {
      for (Vertex b = a + 1; b < n && ok; ++b) {
        if (!g.adjacent(a, b) && g.degree(a) != g.degree(b)) ok = false;
      }
    }
    c.well_stabilized = ok;
  }

  if (parts) {
    const std::size_t p = parts->first.size(), q = parts->second.size();
    if (m == p * q) c.complete_bipartite = std::make_pair(std::min(p, q), std::max(p, q));
  }

  if (m == n - 1 && max_d == n - 1) c.star = n;

  // p vertices of degree n-1, the remaining n-p of degree p.
  std::vector<Vertex> clique, independent;
  for (Vertex v = 0; v < n; ++v) (g.degree(v) == n - 1 ? clique : independent).push_back(v);
  const std::size_t p = clique.empty() ? 0 : (independent.empty() ? n - 1 : clique.size());
  if (p >= 1) {
    if (independent.empty()) {
      c.complete_split = std::make_pair(n, n - 1);
    } else {
      bool ok = std::all_of(independent.begin(), independent.end(),
                            [&](Vertex v) { return g.degree(v) == p; });
      for (std::size_t i = 0; ok && i < independent.size(); ++i) {
        for (Vertex w : g.neighbors(independent[i])) {
          if (g.degree(w) != n - 1) { ok = false; break; }
        }
      }
      if (ok) c.complete_split = std::make_pair(n, p);
    }
  }
  return c;
}

std::vector<std::string> class_tags(const GraphClassification& c) {
  std::vector<std::string> tags;
  auto num = [](std::size_t v) { return std::to_string(v); };
  if (c.regular) tags.push_back("regular(R=" + num(*c.regular) + ")");
  if (c.bidegreed) tags.push_back("bidegreed(" + num(c.bidegreed->first) + "," + num(c.bidegreed->second) + ")");
  if (c.semiregular) tags.push_back("semiregular");
  if (c.weakly_semiregular) tags.push_back("weakly_semiregular(eps=" + num(*c.weakly_semiregular) + ")");
  if (c.nearly_regular) tags.push_back("nearly_regular");
  if (c.weakly_irregular) tags.push_back("weakly_irregular");
  if (c.well_stabilized) tags.push_back("well_stabilized");
  if (c.complete_bipartite) {
    tags.push_back("complete_bipartite(" + num(c.complete_bipartite->first) + "," +
                   num(c.complete_bipartite->second) + ")");
  }
  if (c.star) tags.push_back("star(" + num(*c.star) + ")");
  if (c.complete_split) {
    tags.push_back("complete_split(" + num(c.complete_split->first) + "," +
                   num(c.complete_split->second) + ")");
  }
  if (c.complete) tags.push_back("complete");
  if (c.bipartite) tags.push_back("bipartite");
  if (c.triangle_free) tags.push_back("triangle_free");
  if (c.distinct_degrees >= 3) tags.push_back("degrees=" + num(c.distinct_degrees));
  return tags;
}

std::vector<ImplicationVerdict> assert_taxonomy_implications(const Graph& g) {
  const GraphClassification c = classify(g);
  std::vector<ImplicationVerdict> out;
  auto add = [&](std::string name, bool premise, bool conclusion) {
    out.push_back({std::move(name), premise, !premise || conclusion});
  };
  add("weakly_irregular => weakly_semiregular(eps=1)", c.weakly_irregular,
      c.weakly_semiregular == std::optional<std::size_t>(1));
  add("weakly_irregular => nearly_regular", c.weakly_irregular, c.nearly_regular);
  add("semiregular => bidegreed", c.semiregular, c.bidegreed.has_value());
  add("semiregular => bipartite", c.semiregular, c.bipartite);
  add("weakly_semiregular => bipartite", c.weakly_semiregular.has_value(), c.bipartite);
  add("regular => no non-regular class", c.regular.has_value(),
      !c.bidegreed && !c.semiregular && !c.weakly_semiregular && !c.nearly_regular &&
          !c.weakly_irregular && !c.well_stabilized);
  return out;
}

}  // namespace zagreb
