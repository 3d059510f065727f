#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "girth5/graph.hpp"

namespace girth5 {

/// Permutation-invariant certificate: the row-major upper-triangular
/// adjacency bits of the canonically labeled graph, packed MSB-first so that
/// word-wise comparison equals bitstring comparison.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> cert;
  std::uint64_t aut_size = 0;  // 0 = not computed

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.cert == b.cert;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a,
                                          const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.cert <=> b.cert;
  }
  std::string hex() const;
};

/// Canonical form by iterated equitable refinement (initial colors = degrees)
/// with backtracking over the first smallest non-singleton cell, keeping the
/// lexicographically least certificate.
CanonicalForm canonical_form(const Graph& g);

/// Same, with an initial vertex coloring (refined before degrees are even
/// looked at; the certificate starts with the color-class sizes so that
/// differently colored graphs never compare equal). Set compute_aut to also
/// count the automorphism group order.
CanonicalForm canonical_form_colored(const Graph& g,
                                     const std::vector<int>& colors,
                                     bool compute_aut = false);

bool is_isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class, first occurrence order.
std::vector<Graph> dedupe(const std::vector<Graph>& gs);

/// Lexicographically least certificate over all n! labelings; n <= 8.
/// Testing oracle only.
CanonicalForm brute_force_canonical(const Graph& g);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

}  // namespace girth5
