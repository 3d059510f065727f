#pragma once

#include <vector>

namespace girth5 {

struct DegreePair {
  int delta = 1;
  int Delta = 1;

  bool operator==(const DegreePair&) const = default;
  auto operator<=>(const DegreePair&) const = default;
};

struct DegreeBounds {
  int delta_lo = 0;
  int delta_hi = 0;
  int Delta_lo(int /*delta*/) const { return Delta_lo_; }
  int Delta_hi(int delta) const { return (v_ - 1) / delta; }

  int v_ = 0;
  int Delta_lo_ = 0;
};

/// Degree window for an extremal graph of order v with e edges, given the
/// maximum edge count f_prev one order below:
///   e - f(v-1) <= delta <= floor(sqrt(v-1)),
///   ceil(2e/v) <= Delta <= floor((v-1)/delta).
DegreeBounds garnick_bounds(int v, int e, int f_prev);

/// All (delta, Delta) pairs admissible for order v, reproducing the shipped
/// table rows; delta == Delta is kept only when v*Delta == 2 f(v).
std::vector<DegreePair> candidate_pairs(int v);

/// Maximum edge count of a girth-5 graph, 20 <= v <= 33.
int f_lookup(int v);

/// Number of extremal graphs up to isomorphism, 20 <= v <= 32.
int F_lookup(int v);

}  // namespace girth5
