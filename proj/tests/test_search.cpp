#include <doctest.h>

#include <set>

#include "girth5/canonical.hpp"
#include "girth5/search.hpp"
#include "test_util.hpp"

using namespace girth5;
using namespace girth5::test;

namespace {

std::set<std::string> cert_set(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(canonical_form(g).hex());
  return out;
}

SearchProblem petersen_problem() {
  SearchProblem p;
  p.v = 10;
  p.e_target = 15;
  p.pair = {3, 3};
  return p;
}

}  // namespace

TEST_CASE("star prefix wiring") {
  SearchProblem p;
  p.v = 21;
  p.pair = {3, 5};
  p.star = StarSpec::make(5, {3, 3, 3, 3, 3});
  auto pre = fix_star_prefix(p);
  CHECK(pre.first_free == 21);  // the star fills the graph
  CHECK(pre.g.edge_count() == 20);
  CHECK(pre.g.degree(0) == 5);
  for (int c = 1; c <= 5; ++c) CHECK(pre.g.degree(c) == 4);

  p.v = 32;
  p.pair = {5, 6};
  p.star = StarSpec::make(6, {5, 4, 4, 4, 4, 4});
  auto pre32 = fix_star_prefix(p);
  CHECK(pre32.first_free == 32);
  CHECK(pre32.blocks[0].second - pre32.blocks[0].first == 5);

  p.v = 20;
  p.pair = {3, 5};
  p.star = StarSpec::make(5, {3, 3, 3, 3, 2});
  CHECK(fix_star_prefix(p).first_free == 20);

  p.v = 19;
  CHECK_THROWS_AS(fix_star_prefix(p), std::invalid_argument);
}

TEST_CASE("pentagon search") {
  SearchProblem p;
  p.v = 5;
  p.e_target = 5;
  p.pair = {2, 2};
  auto rep = search(p);
  REQUIRE(rep.solutions.size() == 1);
  CHECK(is_isomorphic(rep.solutions[0], cycle(5)));
  CHECK(rep.exhausted);
}

TEST_CASE("petersen is the unique (10,15) girth-5 graph") {
  auto rep = search(petersen_problem());
  REQUIRE(rep.solutions.size() == 1);
  CHECK(is_isomorphic(rep.solutions[0], petersen()));
}

TEST_CASE("the 20-vertex star search finds exactly the catalog graph") {
  SearchProblem p;
  p.v = 20;
  p.e_target = 41;
  p.pair = {3, 5};
  p.star = StarSpec::make(5, {3, 3, 3, 3, 2});
  auto rep = search(p);
  REQUIRE(rep.solutions.size() == 1);
  CHECK(is_isomorphic(rep.solutions[0], entry(20, 0).graph));
  auto centers = embedded_star_centers(rep.solutions[0], *p.star);
  CHECK(std::find(centers.begin(), centers.end(), 0) != centers.end());
}

TEST_CASE("emitted solutions satisfy every constraint") {
  SearchProblem p;
  p.v = 22;
  p.e_target = 47;
  p.pair = {4, 5};
  p.star = StarSpec::make(5, {4, 3, 3, 3, 3});
  auto rep = search(p);
  REQUIRE(rep.solutions.size() == 1);
  for (const auto& g : rep.solutions) {
    CHECK(girth_at_least_5(g));
    CHECK(g.edge_count() == 47);
    auto prof = degree_profile(g);
    CHECK(prof.delta == 4);
    CHECK(prof.Delta == 5);
  }
}

TEST_CASE("determinism across runs and across jobs") {
  auto a = search(petersen_problem());
  auto b = search(petersen_problem());
  CHECK(a.nodes_explored == b.nodes_explored);
  REQUIRE(a.solutions.size() == b.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i)
    CHECK(a.solutions[i] == b.solutions[i]);

  auto p = petersen_problem();
  p.jobs = 3;
  auto c = search(p);
  REQUIRE(c.solutions.size() == a.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i)
    CHECK(cert_set({c.solutions[i]}) == cert_set({a.solutions[i]}));
}

TEST_CASE("node budget reports a non-exhaustive run") {
  auto p = petersen_problem();
  p.node_budget = 10;
  auto rep = search(p);
  CHECK_FALSE(rep.exhausted);
}

TEST_CASE("disabling any single pruning rule keeps the solution set") {
  // pentagon: everything is cheap, run the full matrix
  SearchProblem tiny;
  tiny.v = 5;
  tiny.e_target = 5;
  tiny.pair = {2, 2};
  auto tiny_ref = cert_set(search(tiny).solutions);
  REQUIRE(tiny_ref.size() == 1);

  // petersen with both forbidden-constraint kinds active
  SearchProblem pet = petersen_problem();
  pet.edge_counts.push_back({3, 3, 15, 15});  // every edge joins two cubic ends
  pet.nonadjacent_sets.push_back({0, 1, 2});
  auto pet_ref = cert_set(search(pet).solutions);
  REQUIRE(pet_ref.size() == 1);

  for (unsigned rule :
       {kPruneGirth, kPruneDegreeCap, kPruneFeasibility, kPruneForbidden,
        kPruneSymmetry}) {
    CAPTURE(rule);
    SearchProblem t = tiny;
    t.disabled_prunes = rule;
    CHECK(cert_set(search(t).solutions) == tiny_ref);
    SearchProblem q = pet;
    q.disabled_prunes = rule;
    CHECK(cert_set(search(q).solutions) == pet_ref);
  }

  // the star search with an active cap-cap constraint; the expensive rules
  // to disable (girth, symmetry) are covered by the small cases above
  SearchProblem star;
  star.v = 21;
  star.e_target = 44;
  star.pair = {4, 5};
  star.star = StarSpec::make(5, {3, 3, 3, 3, 3});
  star.edge_counts.push_back({5, 5, 0, 0});
  auto star_ref = cert_set(search(star).solutions);
  CHECK(star_ref.size() == 2);
  for (unsigned rule : {kPruneDegreeCap, kPruneFeasibility, kPruneForbidden}) {
    CAPTURE(rule);
    SearchProblem p = star;
    p.disabled_prunes = rule;
    CHECK(cert_set(search(p).solutions) == star_ref);
  }
}

TEST_CASE("edge-count constraints select subcases") {
  // the two (4,5) graphs on 21 vertices have no 5-5 edge at all
  SearchProblem p;
  p.v = 21;
  p.e_target = 44;
  p.pair = {4, 5};
  p.star = StarSpec::make(5, {3, 3, 3, 3, 3});
  p.edge_counts.push_back({5, 5, 1, 1 << 20});
  CHECK(search(p).solutions.empty());
}

TEST_CASE("independent-set constraints are honored") {
  auto p = petersen_problem();
  p.nonadjacent_sets.push_back({0, 1, 2});
  auto rep = search(p);
  REQUIRE(rep.solutions.size() == 1);  // petersen has independent triples
  for (int u : {0, 1})
    for (int v : {1, 2})
      if (u != v) CHECK_FALSE(rep.solutions[0].has_edge(u, v));
}

TEST_CASE("absent-star filters drop the larger-star solutions") {
  SearchProblem p;
  p.v = 23;
  p.e_target = 50;
  p.pair = {4, 5};
  p.star = StarSpec::make(5, {4, 3, 3, 3, 3});
  p.absent_stars.push_back(StarSpec::make(5, {4, 4, 3, 3, 3}));
  // every (4,5) extremal 23-vertex graph has the bigger star
  CHECK(search(p).solutions.empty());
}

TEST_CASE("impossible edge targets are rejected") {
  SearchProblem p;
  p.v = 20;
  p.e_target = 42;  // above the table value
  p.pair = {3, 5};
  CHECK_THROWS_AS(search(p), std::invalid_argument);
  p.e_target = 41;
  p.star = StarSpec::make(6, {3, 3, 3, 3, 3, 3});  // D != Delta
  CHECK_THROWS_AS(search(p), std::invalid_argument);
}

TEST_CASE("layered brute force matches the known small extremal values") {
  auto r4 = brute_force_extremal(4);
  CHECK(r4.max_edges == 3);
  CHECK(r4.graphs.size() == 2);  // the path and the claw
  for (const auto& g : r4.graphs) CHECK_FALSE(girth(g).has_value());

  auto r5 = brute_force_extremal(5);
  CHECK(r5.max_edges == 5);
  REQUIRE(r5.graphs.size() == 1);
  CHECK(is_isomorphic(r5.graphs[0], cycle(5)));

  auto r10 = brute_force_extremal(10);
  CHECK(r10.max_edges == 15);
  REQUIRE(r10.graphs.size() == 1);
  CHECK(is_isomorphic(r10.graphs[0], petersen()));
  for (int u = 0; u < 10; ++u) CHECK(r10.graphs[0].degree(u) == 3);

  CHECK_THROWS_AS(brute_force_extremal(11), std::invalid_argument);
}

TEST_CASE("search sweep equals the brute force at tiny orders") {
  for (int v = 2; v <= 7; ++v) {
    auto oracle = brute_force_extremal(v);
    std::set<std::string> from_search;
    for (int delta = 0; delta < v; ++delta)
      for (int Delta = delta; Delta < v; ++Delta) {
        SearchProblem p;
        p.v = v;
        p.e_target = oracle.max_edges;
        p.pair = {delta, Delta};
        for (const auto& g : search(p).solutions)
          from_search.insert(canonical_form(g).hex());
      }
    CHECK(from_search == cert_set(oracle.graphs));
  }
}
