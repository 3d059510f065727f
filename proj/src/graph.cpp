#include "girth5/graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace girth5 {

StarSpec StarSpec::make(int center_degree, std::vector<int> reqs) {
  if (center_degree <= 0 || static_cast<int>(reqs.size()) != center_degree)
    throw std::invalid_argument("star spec needs one requirement per child");
  for (int r : reqs)
    if (r < 0) throw std::invalid_argument("star child requirement < 0");
  std::sort(reqs.begin(), reqs.end(), std::greater<int>());
  return StarSpec{center_degree, std::move(reqs)};
}

int StarSpec::vertex_budget() const {
  int b = 1 + center_degree;
  for (int r : child_reqs) b += r;
  return b;
}

std::string StarSpec::to_string() const {
  std::ostringstream out;
  out << center_degree << ':';
  for (std::size_t i = 0; i < child_reqs.size(); ++i) {
    if (i) out << ',';
    out << child_reqs[i];
  }
  return out.str();
}

StarSpec StarSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("star spec must look like D:r0,r1,...");
  int d = std::stoi(text.substr(0, colon));
  std::vector<int> reqs;
  std::istringstream rest(text.substr(colon + 1));
  std::string tok;
  while (std::getline(rest, tok, ',')) reqs.push_back(std::stoi(tok));
  return make(d, std::move(reqs));
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range 1..64");
  Graph g;
  g.n = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g.add_edge(u, v);
  }
  return g;
}

bool girth_at_least_5(const Graph& g) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      int common = std::popcount(g.adj[u] & g.adj[v]);
      if (g.has_edge(u, v) ? common != 0 : common > 1) return false;
    }
  return true;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge seen at the frontier closes the
  // shortest cycle through the root.
  int best = std::numeric_limits<int>::max();
  std::array<int, kMaxVertices> dist{}, parent{};
  std::array<int, kMaxVertices> queue{};
  for (int s = 0; s < g.n; ++s) {
    dist.fill(-1);
    parent.fill(-1);
    int head = 0, tail = 0;
    queue[tail++] = s;
    dist[s] = 0;
    while (head < tail) {
      int u = queue[head++];
      for_each_bit(g.adj[u], [&](int w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, kUnreachable));
  std::array<int, kMaxVertices> queue{};
  for (int s = 0; s < g.n; ++s) {
    auto& row = d[s];
    int head = 0, tail = 0;
    queue[tail++] = s;
    row[s] = 0;
    while (head < tail) {
      int u = queue[head++];
      for_each_bit(g.adj[u], [&](int w) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      });
    }
  }
  return d;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.delta = std::numeric_limits<int>::max();
  for (int u = 0; u < g.n; ++u) {
    int d = g.degree(u);
    ++p.hist[d];
    p.delta = std::min(p.delta, d);
    p.Delta = std::max(p.Delta, d);
  }
  if (g.n == 0) p.delta = 0;
  return p;
}

DistanceSetFamily s_sets(const Graph& g, int m) {
  if (m < 2) throw std::invalid_argument("s_sets needs m >= 2");
  auto dist = distance_matrix(g);
  std::array<std::uint64_t, kMaxVertices> d3{};
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (dist[u][v] == 3) {
        d3[u] |= std::uint64_t{1} << v;
        d3[v] |= std::uint64_t{1} << u;
      }

  DistanceSetFamily fam;
  fam.m = m;
  // m-cliques of the distance-3 graph, extended in ascending vertex order so
  // the family comes out lex-sorted without a final sort.
  std::vector<int> cur;
  auto extend = [&](auto&& self, std::uint64_t cand) -> void {
    if (static_cast<int>(cur.size()) == m) {
      fam.sets.push_back(cur);
      return;
    }
    int missing = m - static_cast<int>(cur.size());
    while (cand) {
      if (std::popcount(cand) < missing) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      cur.push_back(v);
      std::uint64_t mask = v == 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
      self(self, cand & d3[v] & mask);
      cur.pop_back();
    }
  };
  extend(extend, g.vertex_mask());
  return fam;
}

std::vector<int> embedded_star_centers(const Graph& g, const StarSpec& spec) {
  std::vector<int> centers;
  std::vector<int> child_deg;
  for (int x = 0; x < g.n; ++x) {
    if (g.degree(x) != spec.center_degree) continue;
    child_deg.clear();
    for_each_bit(g.adj[x], [&](int c) { child_deg.push_back(g.degree(c)); });
    std::sort(child_deg.begin(), child_deg.end(), std::greater<int>());
    bool ok = true;
    for (std::size_t i = 0; i < child_deg.size(); ++i)
      if (child_deg[i] < spec.child_reqs[i] + 1) {
        ok = false;
        break;
      }
    if (ok) centers.push_back(x);
  }
  return centers;
}

std::vector<int> sink_nodes(const Graph& g) {
  int Delta = degree_profile(g).Delta;
  auto dist = distance_matrix(g);
  std::vector<int> out;
  for (int x = 0; x < g.n; ++x) {
    if (g.degree(x) != Delta) continue;
    bool covers = true;
    for (int w = 0; w < g.n && covers; ++w)
      covers = dist[x][w] != kUnreachable && dist[x][w] <= 2;
    if (covers) out.push_back(x);
  }
  return out;
}

InducedSubgraph induced_subgraph_by_degree(const Graph& g, int d) {
  InducedSubgraph sub;
  std::array<int, kMaxVertices> newid{};
  newid.fill(-1);
  for (int u = 0; u < g.n; ++u)
    if (g.degree(u) == d) {
      newid[u] = static_cast<int>(sub.orig_ids.size());
      sub.orig_ids.push_back(u);
    }
  sub.graph.n = static_cast<int>(sub.orig_ids.size());
  for (int u = 0; u < g.n; ++u) {
    if (newid[u] < 0) continue;
    for_each_bit(g.adj[u], [&](int w) {
      if (newid[w] >= 0) sub.graph.add_edge(newid[u], newid[w]);
    });
  }
  return sub;
}

}  // namespace girth5
