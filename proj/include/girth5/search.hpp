#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girth5/bounds.hpp"
#include "girth5/graph.hpp"

namespace girth5 {

/// Bounds on the number of edges whose endpoints have the given final
/// degrees (unordered). Encodes the theorem-level subcase splits.
struct EdgeCountConstraint {
  int deg_a = 0;
  int deg_b = 0;
  int min_count = 0;
  int max_count = 1 << 20;
};

enum PruneRule : unsigned {
  kPruneGirth = 1u << 0,
  kPruneDegreeCap = 1u << 1,
  kPruneFeasibility = 1u << 2,
  kPruneForbidden = 1u << 3,
  kPruneSymmetry = 1u << 4,
};

struct SearchProblem {
  int v = 0;
  int e_target = 0;
  DegreePair pair;
  std::optional<StarSpec> star;  // fixed with its center at vertex 0
  std::vector<EdgeCountConstraint> edge_counts;
  std::vector<std::vector<int>> nonadjacent_sets;  // forced independent sets
  std::vector<StarSpec> absent_stars;  // solutions containing one are dropped
  std::uint64_t node_budget = 0;       // 0 = unlimited
  int jobs = 1;
  unsigned disabled_prunes = 0;  // PruneRule mask, for the soundness tests
};

struct SearchReport {
  std::vector<Graph> solutions;  // isomorph-free, sorted by canonical cert
  std::uint64_t nodes_explored = 0;
  double wall_seconds = 0;
  bool exhausted = true;
};

struct StarPrefix {
  Graph g;                      // star edges only
  std::vector<int> child_quota;  // grandchildren per child, sorted descending
  int first_grandchild = 0;
  std::vector<std::pair<int, int>> blocks;  // grandchild range per child
  int first_free = 0;                       // == v when the star fills the graph
};

/// Wire the star: center 0, children 1..D in descending requirement order,
/// each child pre-attached to its quota of fresh grandchildren.
StarPrefix fix_star_prefix(const SearchProblem& p);

/// Exhaustive isomorph-free search over girth-5 graphs matching the problem.
SearchReport search(const SearchProblem& p);

struct ExtremalResult {
  int max_edges = 0;
  std::vector<Graph> graphs;  // maximizers, one per isomorphism class
};

/// Independent layered enumerator for v <= 10: every girth-5 graph class is
/// built by repeated one-vertex extension with per-layer canonical dedupe.
ExtremalResult brute_force_extremal(int v);

}  // namespace girth5
