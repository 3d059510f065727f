#pragma once

#include <string>
#include <vector>

#include "girth5/catalog.hpp"
#include "girth5/graph.hpp"
#include "girth5/search.hpp"

namespace girth5 {

struct ExtensionStep {
  int v_from = 0;
  int delta = 0;  // degree of the added vertex; must be f(v+1) - f(v)
  std::vector<Graph> sources;
};

/// One new vertex glued to every S_{source,delta} element of every source,
/// results deduped up to isomorphism (cert order).
std::vector<Graph> extend(const ExtensionStep& step);

struct RecipeBranch {
  enum Kind { kExtend, kSearch } kind = kExtend;
  std::string name;
  bool long_running = false;  // skipped unless long runs are requested
  SearchProblem problem;      // kSearch only
};

/// The per-order reproduction plan: extension branches for delta = f(v)-f(v-1)
/// plus the star-fixed searches for the remaining degree pairs.
std::vector<RecipeBranch> recipe(int v);

struct BranchOutcome {
  std::string name;
  bool ran = false;
  std::size_t raw = 0;     // solutions before the union dedupe
  std::size_t unique = 0;  // this branch's contribution of distinct certs
  std::uint64_t nodes = 0;
  double wall_seconds = 0;
};

struct ReproduceReport {
  int v = 0;
  std::vector<Graph> solutions;  // cert-sorted
  std::vector<BranchOutcome> branches;
  std::size_t expected = 0;
  bool count_ok = false;
  bool matches_catalog = false;
};

struct ReproduceOptions {
  bool include_long = false;
  int jobs = 1;
};

/// Run the recipe for order v against the catalog (sources for extension and
/// the reference cert set). Throws if catalog entries below v are missing.
ReproduceReport reproduce(int v, const std::vector<CatalogEntry>& catalog,
                          const ReproduceOptions& opt = {});

}  // namespace girth5
