#include <doctest.h>

#include <set>

#include "girth5/bounds.hpp"
#include "girth5/canonical.hpp"
#include "girth5/pipeline.hpp"
#include "test_util.hpp"

using namespace girth5;
using namespace girth5::test;

namespace {

std::vector<Graph> order_graphs(int v) {
  std::vector<Graph> out;
  for (const auto& e : catalog())
    if (e.v == v) out.push_back(e.graph);
  return out;
}

std::set<std::string> cert_set(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(canonical_form(g).hex());
  return out;
}

}  // namespace

TEST_CASE("extension from 20 gives the unique 21-vertex low-degree graph") {
  auto out = extend({20, 3, order_graphs(20)});
  REQUIRE(out.size() == 1);
  CHECK(is_isomorphic(out[0], entry(21, 0).graph));
  CHECK(out[0].edge_count() == 44);
  CHECK(out[0].degree(20) == 3);  // the new vertex, at the extension degree
}

TEST_CASE("the seven 29-vertex candidates collapse to one class") {
  auto sources = order_graphs(28);
  std::size_t raw = 0;
  for (const auto& g : sources) raw += s_sets(g, 4).sets.size();
  CHECK(raw == 7);
  auto out = extend({28, 4, sources});
  REQUIRE(out.size() == 1);
  CHECK(is_isomorphic(out[0], entry(29, 0).graph));
}

TEST_CASE("the two 31-to-32 candidates collapse to one class") {
  auto sources = order_graphs(31);
  std::size_t raw = 0;
  for (const auto& g : sources) raw += s_sets(g, 5).sets.size();
  CHECK(raw == 2);
  auto out = extend({31, 5, sources});
  REQUIRE(out.size() == 1);
  CHECK(is_isomorphic(out[0], entry(32, 0).graph));
}

TEST_CASE("extension preconditions") {
  CHECK_THROWS_AS(extend({20, 4, order_graphs(20)}), std::invalid_argument);
  CHECK_THROWS_AS(extend({20, 3, {cycle(20)}}), std::invalid_argument);
  CHECK_THROWS_AS(extend({20, 3, {cycle(5)}}), std::invalid_argument);
}

TEST_CASE("every extension output loses its new vertex back to a source") {
  auto sources = order_graphs(22);
  auto out = extend({22, 3, sources});
  auto source_certs = cert_set(sources);
  for (const auto& g : out) {
    CHECK(g.degree(22) == 3);
    Graph trimmed = g;
    for_each_bit(trimmed.adj[22], [&](int w) { trimmed.remove_edge(22, w); });
    trimmed.n = 22;
    CHECK(source_certs.count(canonical_form(trimmed).hex()) == 1);
  }
}

TEST_CASE("extension commutes with relabeling of the sources") {
  std::mt19937_64 rng(29);
  auto sources = order_graphs(24);
  auto base = cert_set(extend({24, 3, sources}));
  std::vector<Graph> shuffled;
  for (const auto& g : sources)
    shuffled.push_back(relabel(g, random_permutation(g.n, rng)));
  CHECK(cert_set(extend({24, 3, shuffled})) == base);
}

TEST_CASE("recipes cover 21..32 and reject other orders") {
  for (int v = 21; v <= 32; ++v) CHECK_FALSE(recipe(v).empty());
  CHECK_THROWS_AS(recipe(20), std::out_of_range);
  CHECK_THROWS_AS(recipe(33), std::out_of_range);
}

TEST_CASE("reproduce at the pure-extension orders") {
  for (int v : {26, 27, 29, 30, 32}) {
    auto rep = reproduce(v, catalog());
    CAPTURE(v);
    CHECK(rep.count_ok);
    CHECK(rep.matches_catalog);
    CHECK(rep.solutions.size() == static_cast<std::size_t>(F_lookup(v)));
  }
}

TEST_CASE("reproduce with a search branch, small order") {
  auto rep = reproduce(21, catalog());
  CHECK(rep.count_ok);
  CHECK(rep.matches_catalog);
  REQUIRE(rep.branches.size() == 2);
  CHECK(rep.branches[0].ran);
  CHECK(rep.branches[1].ran);
  CHECK(rep.branches[0].raw == 1);  // four labeled extensions, one class
  CHECK(rep.branches[1].raw == 2);  // the two high-minimum-degree graphs
}

TEST_CASE("long-running branches are skipped by default") {
  auto branches = recipe(28);
  bool has_long = false;
  for (const auto& b : branches) has_long = has_long || b.long_running;
  CHECK(has_long);
  auto branches31 = recipe(31);
  int long31 = 0;
  for (const auto& b : branches31) long31 += b.long_running;
  CHECK(long31 == 1);
}

TEST_CASE("reproduce needs the catalog below the target order") {
  std::vector<CatalogEntry> only_high;
  for (const auto& e : catalog())
    if (e.v >= 24) only_high.push_back(e);
  CHECK_THROWS_AS(reproduce(24, only_high), std::runtime_error);
}
