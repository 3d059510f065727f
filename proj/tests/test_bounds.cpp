#include <doctest.h>

#include "girth5/bounds.hpp"
#include "girth5/graph.hpp"
#include "test_util.hpp"

using namespace girth5;
using namespace girth5::test;

namespace {

// the printed table rows, 21..33
const std::map<int, std::vector<DegreePair>> kTableRows = {
    {21, {{3, 5}, {3, 6}, {4, 5}}},
    {22, {{3, 5}, {3, 6}, {3, 7}, {4, 5}}},
    {23, {{3, 5}, {3, 6}, {3, 7}, {4, 5}}},
    {24, {{4, 5}}},
    {25, {{3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 6}}},
    {26, {{4, 5}, {4, 6}}},
    {27, {{4, 5}, {4, 6}}},
    {28, {{3, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {4, 5}, {4, 6}}},
    {29, {{4, 5}, {4, 6}, {4, 7}}},
    {30, {{4, 6}, {4, 7}}},
    {31, {{4, 6}, {4, 7}, {5, 6}}},
    {32, {{5, 6}}},
    {33,
     {{2, 6}, {2, 7}, {2, 8}, {2, 9}, {2, 10}, {2, 11}, {2, 12}, {2, 13},
      {2, 14}, {2, 15}, {2, 16}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {3, 10},
      {4, 6}, {4, 7}, {4, 8}, {5, 6}}},
};

}  // namespace

TEST_CASE("degree window arithmetic") {
  auto b = garnick_bounds(24, 54, 50);
  CHECK(b.delta_lo == 4);
  CHECK(b.delta_hi == 4);
  CHECK(b.Delta_lo(4) == 5);
  CHECK(b.Delta_hi(4) == 5);

  auto b32 = garnick_bounds(32, 85, 80);
  CHECK(b32.delta_lo == 5);
  CHECK(b32.Delta_lo(5) == 6);
  CHECK(b32.Delta_hi(5) == 6);

  auto b2 = garnick_bounds(2, 1, 0);
  CHECK(b2.delta_lo == 1);
  CHECK(b2.delta_hi == 1);
  CHECK(b2.Delta_lo(1) == 1);
  CHECK(b2.Delta_hi(1) == 1);

  CHECK_THROWS_AS(garnick_bounds(1, 0, 0), std::invalid_argument);
}

TEST_CASE("candidate pairs reproduce the printed rows exactly") {
  for (const auto& [v, row] : kTableRows) CHECK(candidate_pairs(v) == row);
  CHECK_THROWS_AS(candidate_pairs(19), std::out_of_range);
  CHECK_THROWS_AS(candidate_pairs(34), std::out_of_range);
}

TEST_CASE("edge-count and graph-count lookups") {
  CHECK(f_lookup(20) == 41);
  CHECK(f_lookup(28) == 68);
  CHECK(f_lookup(33) == 87);
  CHECK(F_lookup(23) == 7);
  CHECK(F_lookup(20) == 1);
  CHECK(F_lookup(32) == 1);
  CHECK_THROWS_AS(f_lookup(19), std::out_of_range);
  CHECK_THROWS_AS(F_lookup(33), std::out_of_range);
}

TEST_CASE("the edge table climbs by the extension degrees") {
  for (int v = 21; v <= 33; ++v) {
    int diff = f_lookup(v) - f_lookup(v - 1);
    CHECK(diff >= 2);
    CHECK(diff <= 5);
  }
}

TEST_CASE("every catalog graph sits inside its admissible degree window") {
  for (const auto& e : catalog()) {
    auto prof = degree_profile(e.graph);
    auto row = candidate_pairs(e.v);
    CHECK(std::find(row.begin(), row.end(),
                    DegreePair{prof.delta, prof.Delta}) != row.end());
  }
}
