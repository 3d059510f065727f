#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace girth5 {

inline constexpr int kMaxVertices = 64;

/// Undirected simple graph on at most 64 vertices, stored as one adjacency
/// bitset word per vertex. Values are cheap to copy and never mutated by the
/// query functions below.
struct Graph {
  int n = 0;
  std::array<std::uint64_t, kMaxVertices> adj{};

  bool has_edge(int u, int v) const { return adj[u] >> v & 1u; }
  void add_edge(int u, int v) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(int u, int v) {
    adj[u] &= ~(std::uint64_t{1} << v);
    adj[v] &= ~(std::uint64_t{1} << u);
  }
  int degree(int u) const { return std::popcount(adj[u]); }
  int edge_count() const {
    int twice = 0;
    for (int u = 0; u < n; ++u) twice += degree(u);
    return twice / 2;
  }
  std::uint64_t vertex_mask() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  bool operator==(const Graph&) const = default;
};

/// Iterate the set bits of a word as vertex ids.
template <typename F>
void for_each_bit(std::uint64_t word, F&& f) {
  while (word) {
    f(std::countr_zero(word));
    word &= word - 1;
  }
}

struct DegreeProfile {
  int delta = 0;
  int Delta = 0;
  std::map<int, int> hist;

  bool operator==(const DegreeProfile&) const = default;
};

/// Requirement pattern for an embedded star: a center of degree
/// `center_degree` whose children each dominate one entry of `child_reqs`
/// (entry r means the child has degree at least r+1). Requirements are kept
/// sorted descending and matched by pointwise dominance of the sorted child
/// degree list.
struct StarSpec {
  int center_degree = 0;
  std::vector<int> child_reqs;

  static StarSpec make(int center_degree, std::vector<int> reqs);
  int vertex_budget() const;  // center + children + required grandchildren
  std::string to_string() const;
  static StarSpec parse(const std::string& text);  // "5:3,3,3,3,2"

  bool operator==(const StarSpec&) const = default;
};

/// All m-vertex sets whose members are pairwise at distance exactly 3.
struct DistanceSetFamily {
  int m = 0;
  std::vector<std::vector<int>> sets;  // each sorted, family lex-sorted

  bool operator==(const DistanceSetFamily&) const = default;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> orig_ids;  // subgraph vertex i was orig_ids[i]
};

inline constexpr int kUnreachable = -1;

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Common-neighbour characterization: no two vertices share two neighbours,
/// and adjacent vertices share none.
bool girth_at_least_5(const Graph& g);

/// Length of the shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// BFS hop counts; kUnreachable for disconnected pairs.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

DegreeProfile degree_profile(const Graph& g);

DistanceSetFamily s_sets(const Graph& g, int m);

std::vector<int> embedded_star_centers(const Graph& g, const StarSpec& spec);

/// Maximum-degree vertices at distance <= 2 from every other vertex.
std::vector<int> sink_nodes(const Graph& g);

InducedSubgraph induced_subgraph_by_degree(const Graph& g, int d);

}  // namespace girth5
