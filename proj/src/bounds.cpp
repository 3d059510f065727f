#include "girth5/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace girth5 {

namespace {

constexpr int kFirstOrder = 20;
constexpr int kLastOrder = 33;
constexpr int kEdgeMax[] = {41, 44, 47, 50, 54, 57, 61, 65, 68, 72, 76, 80, 85, 87};
constexpr int kGraphCount[] = {1, 3, 3, 7, 1, 6, 2, 1, 4, 1, 1, 2, 1};
// One order below the table; needed only for the v = 20 degree window.
constexpr int kEdgeMax19 = 38;

int isqrt(int x) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

int f_lookup(int v) {
  if (v < kFirstOrder || v > kLastOrder)
    throw std::out_of_range("f(v) table covers 20..33");
  return kEdgeMax[v - kFirstOrder];
}

int F_lookup(int v) {
  if (v < kFirstOrder || v > 32)
    throw std::out_of_range("F(v) table covers 20..32");
  return kGraphCount[v - kFirstOrder];
}

DegreeBounds garnick_bounds(int v, int e, int f_prev) {
  if (v < 2 || e < 0) throw std::invalid_argument("garnick_bounds: v >= 2, e >= 0");
  DegreeBounds b;
  b.v_ = v;
  b.delta_lo = e - f_prev;
  b.delta_hi = isqrt(v - 1);
  b.Delta_lo_ = (2 * e + v - 1) / v;
  return b;
}

std::vector<DegreePair> candidate_pairs(int v) {
  if (v < kFirstOrder || v > kLastOrder)
    throw std::out_of_range("candidate_pairs covers 20..33");
  int e = f_lookup(v);
  int f_prev = v == kFirstOrder ? kEdgeMax19 : f_lookup(v - 1);
  auto b = garnick_bounds(v, e, f_prev);
  std::vector<DegreePair> pairs;
  for (int delta = std::max(1, b.delta_lo); delta <= b.delta_hi; ++delta)
    for (int Delta = std::max(delta, b.Delta_lo(delta)); Delta <= b.Delta_hi(delta);
         ++Delta) {
      if (delta == Delta && v * Delta != 2 * e) continue;
      pairs.push_back({delta, Delta});
    }
  return pairs;
}

}  // namespace girth5
