#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "girth5/graph.hpp"

namespace girth5 {

/// One fixture graph plus the structural claims transcribed for it.
struct CatalogEntry {
  int v = 0;
  int index = 0;
  std::string appendix;
  Graph graph;
  std::map<int, int> degree_hist;
  std::map<int, std::vector<std::vector<int>>> s_sets;  // m -> family
  std::optional<std::vector<int>> sink_nodes;
  std::vector<StarSpec> stars;
  std::string file;
};

/// Strict load of every *.cat file in the directory (line 1 graph6, rest one
/// JSON claims object). Throws on malformed input or if any order's entry
/// count disagrees with the extremal-count table.
std::vector<CatalogEntry> load_catalog(const std::string& dir);

struct ClaimResult {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<ClaimResult> results;
  bool all_pass = true;
};

/// Recompute every claim of the entry: girth, edge count, degree histogram,
/// each listed S-set family (exact equality), sink nodes, embedded stars, and
/// membership of (delta, Delta) in the admissible table row.
VerifyReport verify_entry(const CatalogEntry& e);

}  // namespace girth5
