// Batch front end: verification, search, extension and reproduction runs.
// graph6 goes to stdout, diagnostics to stderr, reports behind --json.
// Exit codes: 0 pass, 1 verification or count mismatch, 2 usage/IO errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "girth5/bounds.hpp"
#include "girth5/canonical.hpp"
#include "girth5/catalog.hpp"
#include "girth5/pipeline.hpp"
#include "girth5/search.hpp"

using nlohmann::json;
using namespace girth5;

namespace {

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> gs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    gs.push_back(graph6_decode(line));
  }
  if (gs.empty()) throw std::runtime_error(path + " holds no graphs");
  return gs;
}

Graph graph_from_cert(const CanonicalForm& c) {
  Graph g;
  g.n = c.n;
  int t = 0;
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j, ++t)
      if (c.cert[t >> 6] >> (63 - (t & 63)) & 1) g.add_edge(i, j);
  return g;
}

void apply_forbid(SearchProblem& p, const std::string& expr) {
  auto colon = expr.find(':');
  if (colon == std::string::npos)
    throw std::runtime_error("--forbid expects kind:args, got " + expr);
  std::string kind = expr.substr(0, colon);
  std::string args = expr.substr(colon + 1);
  auto ints = [&] {
    std::vector<int> out;
    std::istringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
  };
  if (kind == "no-dd-edge") {
    auto v = ints();
    if (v.size() != 2) throw std::runtime_error("--forbid no-dd-edge:A,B");
    p.edge_counts.push_back({v[0], v[1], 0, 0});
  } else if (kind == "dd-edges") {
    auto v = ints();
    if (v.size() != 4) throw std::runtime_error("--forbid dd-edges:A,B,MIN,MAX");
    p.edge_counts.push_back({v[0], v[1], v[2], v[3]});
  } else if (kind == "independent") {
    p.nonadjacent_sets.push_back(ints());
  } else if (kind == "no-star") {
    p.absent_stars.push_back(StarSpec::parse(args));
  } else {
    throw std::runtime_error("--forbid: unknown kind " + kind);
  }
}

void emit(const json& report, bool want_json) {
  if (want_json) std::cout << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"girth-5 extremal graph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool want_json = false;
  app.add_flag("--json", want_json, "print a JSON report on stdout");

  std::string catalog_dir = "data/catalog";
  int jobs = 1;
  bool long_runs = false;

  auto* cmd_verify = app.add_subcommand("verify", "re-verify the catalog claims");
  cmd_verify->add_option("catalog", catalog_dir, "catalog directory");

  auto* cmd_search = app.add_subcommand("search", "exhaustive star-fixed search");
  int sv = 0, se = 0, sdelta = 0, sDelta = 0;
  std::string star_text;
  std::vector<std::string> forbids;
  std::uint64_t budget = 0;
  cmd_search->add_option("--v", sv, "order")->required();
  cmd_search->add_option("--edges", se, "edge target")->required();
  cmd_search->add_option("--delta", sdelta, "minimum degree")->required();
  cmd_search->add_option("--Delta", sDelta, "maximum degree")->required();
  cmd_search->add_option("--star", star_text, "star spec D:r0,r1,...");
  cmd_search->add_option("--forbid", forbids,
                         "no-dd-edge:A,B | dd-edges:A,B,MIN,MAX | "
                         "independent:v,... | no-star:SPEC");
  cmd_search->add_option("--budget", budget, "node budget, 0 = unlimited");
  cmd_search->add_option("--jobs", jobs, "worker threads");

  auto* cmd_extend = app.add_subcommand("extend", "one-vertex extensions");
  int from_v = 0;
  cmd_extend->add_option("--from-catalog", from_v, "source order")->required();
  cmd_extend->add_option("--catalog", catalog_dir, "catalog directory");

  auto* cmd_reproduce = app.add_subcommand("reproduce", "run the recipe for v");
  int rv = 0;
  cmd_reproduce->add_option("--v", rv, "order")->required();
  cmd_reproduce->add_option("--catalog", catalog_dir, "catalog directory");
  cmd_reproduce->add_flag("--long", long_runs, "include the multi-hour branches");
  cmd_reproduce->add_option("--jobs", jobs, "worker threads");

  auto* cmd_canon = app.add_subcommand("canon", "canonical forms of graph6 input");
  std::string canon_file;
  cmd_canon->add_option("file", canon_file, "graph6 file")->required();

  auto* cmd_ssets = app.add_subcommand("ssets", "distance-3 m-sets");
  std::string ssets_file;
  int m = 2;
  cmd_ssets->add_option("file", ssets_file, "graph6 file")->required();
  cmd_ssets->add_option("--m", m, "set size")->required();

  auto* cmd_bounds = app.add_subcommand("bounds", "admissible degree pairs");
  int bv = 0;
  cmd_bounds->add_option("--v", bv, "order")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_verify) {
      auto entries = load_catalog(catalog_dir);
      json failures = json::array();
      for (const auto& e : entries) {
        auto rep = verify_entry(e);
        for (const auto& r : rep.results)
          if (!r.pass)
            failures.push_back(
                {{"file", e.file}, {"claim", r.claim}, {"detail", r.detail}});
      }
      bool pass = failures.empty();
      std::cerr << entries.size() << " entries, " << failures.size()
                << " failing claims\n";
      emit(json{{"command", "verify"},
                {"catalog", catalog_dir},
                {"entries", entries.size()},
                {"failures", failures},
                {"pass", pass}},
           want_json);
      return pass ? 0 : 1;
    }

    if (*cmd_search) {
      SearchProblem p;
      p.v = sv;
      p.e_target = se;
      p.pair = {sdelta, sDelta};
      if (!star_text.empty()) p.star = StarSpec::parse(star_text);
      for (const auto& f : forbids) apply_forbid(p, f);
      p.node_budget = budget;
      p.jobs = jobs;
      auto rep = search(p);
      json certs = json::array();
      json sols = json::array();
      for (const auto& g : rep.solutions) {
        std::cout << graph6_encode(g) << "\n";
        sols.push_back(graph6_encode(g));
        certs.push_back(canonical_form(g).hex());
      }
      std::cerr << rep.solutions.size() << " solutions, " << rep.nodes_explored
                << " nodes, " << rep.wall_seconds << "s"
                << (rep.exhausted ? "" : " (budget hit)") << "\n";
      emit(json{{"command", "search"},
                {"v", sv},
                {"edges", se},
                {"delta", sdelta},
                {"Delta", sDelta},
                {"star", star_text.empty() ? json() : json(star_text)},
                {"solutions", sols},
                {"certs", certs},
                {"nodes", rep.nodes_explored},
                {"wall_seconds", rep.wall_seconds},
                {"exhausted", rep.exhausted},
                {"pass", true}},
           want_json);
      return 0;
    }

    if (*cmd_extend) {
      auto entries = load_catalog(catalog_dir);
      ExtensionStep step;
      step.v_from = from_v;
      step.delta = f_lookup(from_v + 1) - f_lookup(from_v);
      for (const auto& e : entries)
        if (e.v == from_v) step.sources.push_back(e.graph);
      auto out = extend(step);
      json sols = json::array();
      for (const auto& g : out) {
        std::cout << graph6_encode(g) << "\n";
        sols.push_back(graph6_encode(g));
      }
      std::cerr << out.size() << " graphs on " << from_v + 1 << " vertices\n";
      emit(json{{"command", "extend"},
                {"from", from_v},
                {"delta", step.delta},
                {"solutions", sols},
                {"pass", true}},
           want_json);
      return 0;
    }

    if (*cmd_reproduce) {
      auto entries = load_catalog(catalog_dir);
      ReproduceOptions opt;
      opt.include_long = long_runs;
      opt.jobs = jobs;
      auto rep = reproduce(rv, entries, opt);
      for (const auto& g : rep.solutions) std::cout << graph6_encode(g) << "\n";
      bool pass = rep.count_ok && rep.matches_catalog;
      std::cerr << rep.solutions.size() << " graph(s) (expected " << rep.expected
                << "): " << (pass ? "PASS" : "FAIL") << "\n";
      json branches = json::array();
      for (const auto& b : rep.branches)
        branches.push_back({{"name", b.name},
                            {"ran", b.ran},
                            {"raw", b.raw},
                            {"unique", b.unique},
                            {"nodes", b.nodes},
                            {"wall_seconds", b.wall_seconds}});
      json sols = json::array();
      for (const auto& g : rep.solutions) sols.push_back(graph6_encode(g));
      emit(json{{"command", "reproduce"},
                {"v", rv},
                {"expected", rep.expected},
                {"found", rep.solutions.size()},
                {"matches_catalog", rep.matches_catalog},
                {"branches", branches},
                {"solutions", sols},
                {"pass", pass}},
           want_json);
      return pass ? 0 : 1;
    }

    if (*cmd_canon) {
      json graphs = json::array();
      for (const auto& g : read_graph6_file(canon_file)) {
        auto c = canonical_form(g);
        std::cout << graph6_encode(graph_from_cert(c)) << "\n";
        graphs.push_back({{"input", graph6_encode(g)},
                          {"canonical", graph6_encode(graph_from_cert(c))},
                          {"cert", c.hex()}});
      }
      emit(json{{"command", "canon"}, {"graphs", graphs}, {"pass", true}},
           want_json);
      return 0;
    }

    if (*cmd_ssets) {
      json graphs = json::array();
      for (const auto& g : read_graph6_file(ssets_file)) {
        auto fam = s_sets(g, m);
        for (const auto& set : fam.sets) {
          for (std::size_t i = 0; i < set.size(); ++i)
            std::cout << (i ? "," : "") << set[i];
          std::cout << "\n";
        }
        graphs.push_back({{"input", graph6_encode(g)}, {"sets", fam.sets}});
      }
      emit(json{{"command", "ssets"}, {"m", m}, {"graphs", graphs}, {"pass", true}},
           want_json);
      return 0;
    }

    if (*cmd_bounds) {
      auto pairs = candidate_pairs(bv);
      json jp = json::array();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        std::cout << (i ? " " : "") << "(" << pairs[i].delta << ","
                  << pairs[i].Delta << ")";
        jp.push_back({pairs[i].delta, pairs[i].Delta});
      }
      std::cout << "\n";
      emit(json{{"command", "bounds"},
                {"v", bv},
                {"f", f_lookup(bv)},
                {"pairs", jp},
                {"pass", true}},
           want_json);
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
