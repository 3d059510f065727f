#include "girth5/pipeline.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "girth5/bounds.hpp"
#include "girth5/canonical.hpp"

namespace girth5 {

std::vector<Graph> extend(const ExtensionStep& step) {
  int v_to = step.v_from + 1;
  if (step.delta != f_lookup(v_to) - f_lookup(step.v_from))
    throw std::invalid_argument("extension degree must be f(v+1) - f(v)");
  std::vector<Graph> raw;
  for (const auto& src : step.sources) {
    if (src.n != step.v_from)
      throw std::invalid_argument("extension source has the wrong order");
    if (src.edge_count() != f_lookup(step.v_from) || !girth_at_least_5(src))
      throw std::invalid_argument("extension source is not extremal");
    auto fam = s_sets(src, step.delta);
    for (const auto& set : fam.sets) {
      Graph g = src;
      g.n = v_to;
      for (int u : set) g.add_edge(u, step.v_from);
      if (girth_at_least_5(g)) raw.push_back(g);
    }
  }
  // canonical dedupe, deterministic cert order
  std::map<CanonicalForm, Graph> uniq;
  for (const auto& g : raw) uniq.emplace(canonical_form(g), g);
  std::vector<Graph> out;
  for (auto& [c, g] : uniq) out.push_back(g);
  return out;
}

namespace {

SearchProblem star_search(int v, DegreePair pair, const StarSpec& star) {
  SearchProblem p;
  p.v = v;
  p.e_target = f_lookup(v);
  p.pair = pair;
  p.star = star;
  return p;
}

}  // namespace

std::vector<RecipeBranch> recipe(int v) {
  auto ext = [&](int from) {
    RecipeBranch b;
    b.kind = RecipeBranch::kExtend;
    b.name = "extend_" + std::to_string(from);
    return b;
  };
  auto srch = [&](DegreePair pair, const StarSpec& star, std::string tag) {
    RecipeBranch b;
    b.kind = RecipeBranch::kSearch;
    b.name = "search_" + std::to_string(pair.delta) + std::to_string(pair.Delta) +
             (tag.empty() ? "" : "_" + tag);
    b.problem = star_search(v, pair, star);
    return b;
  };
  std::vector<RecipeBranch> out;
  switch (v) {
    case 21:
      out.push_back(ext(20));
      out.push_back(srch({4, 5}, StarSpec::make(5, {3, 3, 3, 3, 3}), ""));
      break;
    case 22:
      out.push_back(ext(21));
      out.push_back(srch({4, 5}, StarSpec::make(5, {4, 3, 3, 3, 3}), ""));
      break;
    case 23: {
      out.push_back(ext(22));
      out.push_back(srch({4, 5}, StarSpec::make(5, {4, 4, 3, 3, 3}), ""));
      auto fallback = srch({4, 5}, StarSpec::make(5, {4, 3, 3, 3, 3}), "smallstar");
      fallback.problem.absent_stars.push_back(StarSpec::make(5, {4, 4, 3, 3, 3}));
      out.push_back(fallback);
      break;
    }
    case 24:
      out.push_back(ext(23));
      out.push_back(srch({4, 5}, StarSpec::make(5, {4, 4, 4, 3, 3}), ""));
      break;
    case 25: {
      out.push_back(ext(24));
      out.push_back(srch({4, 5}, StarSpec::make(5, {4, 4, 4, 4, 3}), ""));
      auto fallback = srch({4, 5}, StarSpec::make(5, {4, 4, 4, 3, 3}), "smallstar");
      fallback.problem.absent_stars.push_back(StarSpec::make(5, {4, 4, 4, 4, 3}));
      out.push_back(fallback);
      // the (4,6) possibility; contributes nothing but is asserted, not assumed
      out.push_back(srch({4, 6}, StarSpec::make(6, {3, 3, 3, 3, 3, 3}), ""));
      break;
    }
    case 26:
      out.push_back(ext(25));
      break;
    case 27:
      out.push_back(ext(26));
      break;
    case 28: {
      out.push_back(ext(27));
      // exactly one edge between the degree-4 vertices; the two-edge case is
      // eliminated at theorem level, the zero-edge case is the long empty run
      auto one44 = srch({4, 5}, StarSpec::make(5, {4, 4, 4, 4, 4}), "one44edge");
      one44.problem.edge_counts.push_back({4, 4, 1, 1});
      out.push_back(one44);
      out.push_back(srch({4, 6}, StarSpec::make(6, {4, 4, 4, 3, 3, 3}), ""));
      auto zero44 = srch({4, 5}, StarSpec::make(5, {4, 4, 4, 4, 4}), "no44edge");
      zero44.problem.edge_counts.push_back({4, 4, 0, 0});
      zero44.long_running = true;
      out.push_back(zero44);
      break;
    }
    case 29:
      out.push_back(ext(28));
      break;
    case 30:
      out.push_back(ext(29));
      break;
    case 31: {
      out.push_back(ext(30));
      // degree-6 vertices have all neighbours of degree 5 in this case, which
      // makes the default run tractable; the unconstrained search is long
      auto fast = srch({5, 6}, StarSpec::make(6, {4, 4, 4, 4, 4, 4}), "no66edge");
      fast.problem.edge_counts.push_back({6, 6, 0, 0});
      out.push_back(fast);
      auto full = srch({5, 6}, StarSpec::make(6, {4, 4, 4, 4, 4, 4}), "full");
      full.long_running = true;
      out.push_back(full);
      break;
    }
    case 32:
      out.push_back(ext(31));
      break;
    default:
      throw std::out_of_range("reproduce covers 21 <= v <= 32");
  }
  return out;
}

ReproduceReport reproduce(int v, const std::vector<CatalogEntry>& catalog,
                          const ReproduceOptions& opt) {
  ReproduceReport rep;
  rep.v = v;
  rep.expected = static_cast<std::size_t>(F_lookup(v));

  auto sources_of = [&](int order) {
    std::vector<Graph> out;
    for (const auto& e : catalog)
      if (e.v == order) out.push_back(e.graph);
    if (out.empty())
      throw std::runtime_error("catalog has no graphs of order " +
                               std::to_string(order));
    return out;
  };

  std::map<CanonicalForm, Graph> uniq;
  for (const auto& br : recipe(v)) {
    BranchOutcome outc;
    outc.name = br.name;
    if (br.long_running && !opt.include_long) {
      rep.branches.push_back(outc);
      continue;
    }
    outc.ran = true;
    std::vector<Graph> got;
    if (br.kind == RecipeBranch::kExtend) {
      ExtensionStep step;
      step.v_from = v - 1;
      step.delta = f_lookup(v) - f_lookup(v - 1);
      step.sources = sources_of(v - 1);
      got = extend(step);
      outc.raw = got.size();
    } else {
      SearchProblem p = br.problem;
      p.jobs = opt.jobs;
      auto sr = search(p);
      got = std::move(sr.solutions);
      outc.raw = got.size();
      outc.nodes = sr.nodes_explored;
      outc.wall_seconds = sr.wall_seconds;
    }
    for (const auto& g : got)
      if (uniq.emplace(canonical_form(g), g).second) ++outc.unique;
    rep.branches.push_back(outc);
  }
  for (auto& [c, g] : uniq) rep.solutions.push_back(g);
  rep.count_ok = rep.solutions.size() == rep.expected;

  std::map<CanonicalForm, int> want;
  for (const auto& e : catalog)
    if (e.v == v) ++want[canonical_form(e.graph)];
  std::map<CanonicalForm, int> have;
  for (auto& [c, g] : uniq) ++have[c];
  rep.matches_catalog = want == have;
  return rep;
}

}  // namespace girth5
