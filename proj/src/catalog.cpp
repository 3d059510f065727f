#include "girth5/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "girth5/bounds.hpp"
#include "girth5/canonical.hpp"

namespace girth5 {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

CatalogEntry parse_entry(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string g6;
  if (!std::getline(in, g6) || g6.empty())
    throw std::runtime_error(path.string() + ": missing graph6 line");
  std::stringstream rest;
  rest << in.rdbuf();
  json claims = json::parse(rest.str());

  CatalogEntry e;
  e.file = path.filename().string();
  e.graph = graph6_decode(g6);
  e.v = claims.at("v").get<int>();
  e.index = claims.at("index").get<int>();
  e.appendix = claims.at("appendix").get<std::string>();
  if (e.v != e.graph.n)
    throw std::runtime_error(path.string() + ": order disagrees with graph6");
  for (auto& [key, val] : claims.at("degree_hist").items())
    e.degree_hist[std::stoi(key)] = val.get<int>();
  for (auto& [key, fam] : claims.at("s_sets").items()) {
    auto& out = e.s_sets[std::stoi(key)];
    for (auto& tup : fam) out.push_back(tup.get<std::vector<int>>());
  }
  if (claims.contains("sink_nodes"))
    e.sink_nodes = claims.at("sink_nodes").get<std::vector<int>>();
  for (auto& st : claims.at("stars"))
    e.stars.push_back(StarSpec::make(st.at(0).get<int>(),
                                     st.at(1).get<std::vector<int>>()));
  return e;
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw std::runtime_error("catalog directory not found: " + dir);
  std::vector<CatalogEntry> entries;
  for (const auto& de : fs::directory_iterator(dir))
    if (de.path().extension() == ".cat") entries.push_back(parse_entry(de.path()));
  if (entries.empty()) throw std::runtime_error("catalog directory is empty: " + dir);
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.v, a.index) < std::tie(b.v, b.index);
  });
  std::map<int, int> per_order;
  for (const auto& e : entries) ++per_order[e.v];
  for (int v = 20; v <= 32; ++v)
    if (per_order[v] != F_lookup(v))
      throw std::runtime_error("catalog count for order " + std::to_string(v) +
                               " is " + std::to_string(per_order[v]) +
                               ", expected " + std::to_string(F_lookup(v)));
  return entries;
}

VerifyReport verify_entry(const CatalogEntry& e) {
  VerifyReport rep;
  auto add = [&](const std::string& claim, bool pass, std::string detail = "") {
    rep.results.push_back({claim, pass, std::move(detail)});
    rep.all_pass = rep.all_pass && pass;
  };
  const Graph& g = e.graph;

  add("girth>=5", girth_at_least_5(g));

  int want_edges = f_lookup(e.v);
  add("edge_count", g.edge_count() == want_edges,
      "have " + std::to_string(g.edge_count()) + " want " +
          std::to_string(want_edges));

  auto prof = degree_profile(g);
  add("degree_hist", prof.hist == e.degree_hist);

  auto pairs = candidate_pairs(e.v);
  add("degree_pair_admissible",
      std::find(pairs.begin(), pairs.end(),
                DegreePair{prof.delta, prof.Delta}) != pairs.end(),
      "(" + std::to_string(prof.delta) + "," + std::to_string(prof.Delta) + ")");

  for (const auto& [m, fam] : e.s_sets) {
    auto computed = s_sets(g, m);
    add("s_sets_m" + std::to_string(m), computed.sets == fam,
        "computed " + std::to_string(computed.sets.size()) + " claimed " +
            std::to_string(fam.size()));
  }

  if (e.sink_nodes)
    add("sink_nodes", sink_nodes(g) == *e.sink_nodes);

  for (const auto& spec : e.stars)
    add("star_" + spec.to_string(),
        !embedded_star_centers(g, spec).empty());

  return rep;
}

}  // namespace girth5
