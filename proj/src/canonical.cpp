#include "girth5/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace girth5 {

namespace {

std::vector<std::uint64_t> pack_cert(const Graph& g, const int* perm) {
  int nbits = g.n * (g.n - 1) / 2;
  std::vector<std::uint64_t> words((nbits + 63) / 64, 0);
  int t = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j, ++t)
      if (g.has_edge(perm[i], perm[j]))
        words[t >> 6] |= std::uint64_t{1} << (63 - (t & 63));
  return words;
}

// Ordered partition of the vertex set; cells listed in partition order.
using Cells = std::vector<std::vector<int>>;

// Finds the lexicographically least upper-triangular adjacency string over
// all orderings that keep the initial cells in place (for the plain form the
// initial partition is a single cell, so this is the minimum over all n!
// orderings). Row p of the string is fully determined by the counts of the
// candidate's neighbours per later cell, so at every node only the candidates
// with the least count signature can reach the minimum; splitting each later
// cell into non-neighbours-then-neighbours commits exactly those row bits.
// Ties branch, with prefix branch-and-bound against the best complete string.
struct Labeler {
  const Graph& g;
  bool compute_aut = false;
  std::vector<std::uint64_t> best;
  bool have_best = false;
  std::uint64_t best_version = 0;
  std::uint64_t best_count = 0;
  std::vector<std::uint64_t> cur;
  int cur_bits = 0;
  int placed = 0;

  void set_bit(int t) { cur[t >> 6] |= std::uint64_t{1} << (63 - (t & 63)); }
  bool best_bit(int t) const {
    return best[t >> 6] >> (63 - (t & 63)) & 1;
  }

  // appends the row bits for candidate v against the cells (v removed from
  // the first); returns the split partition
  Cells append_row(const Cells& cells, int v) {
    Cells next;
    next.reserve(cells.size() * 2);
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      std::vector<int> non, nbr;
      for (int w : cells[ci]) {
        if (w == v) continue;
        (g.has_edge(v, w) ? nbr : non).push_back(w);
      }
      for (std::size_t i = 0; i < nbr.size(); ++i)
        set_bit(cur_bits + static_cast<int>(non.size() + i));
      cur_bits += static_cast<int>(non.size() + nbr.size());
      if (!non.empty()) next.push_back(std::move(non));
      if (!nbr.empty()) next.push_back(std::move(nbr));
    }
    return next;
  }

  void clear_row(int from_bit) {
    for (int t = from_bit; t < cur_bits; ++t)
      cur[t >> 6] &= ~(std::uint64_t{1} << (63 - (t & 63)));
    cur_bits = from_bit;
  }

  // -1 below best, 0 equal, +1 above best on [from, cur_bits)
  int compare_range(int from) const {
    for (int t = from; t < cur_bits; ++t) {
      bool b = best_bit(t);
      bool c = cur[t >> 6] >> (63 - (t & 63)) & 1;
      if (c != b) return c ? 1 : -1;
    }
    return 0;
  }

  void descend(const Cells& cells, bool tight) {
    if (placed == g.n) {
      if (!have_best) {
        best = cur;
        have_best = true;
        ++best_version;
        best_count = 1;
      } else if (tight) {
        ++best_count;  // a second ordering reaching the same minimum
      } else {
        best = cur;
        ++best_version;
        best_count = 1;
      }
      return;
    }
    const auto& head = cells.front();
    std::vector<std::uint64_t> cell_mask(cells.size(), 0);
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
      for (int w : cells[ci]) cell_mask[ci] |= std::uint64_t{1} << w;
    // count signature per candidate: neighbours in the head remainder, then
    // in every later cell
    std::vector<std::vector<int>> keys(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) {
      int v = head[i];
      auto& key = keys[i];
      key.reserve(cells.size());
      for (std::size_t ci = 0; ci < cells.size(); ++ci)
        key.push_back(std::popcount(
            g.adj[v] & cell_mask[ci] & ~(std::uint64_t{1} << v)));
    }
    const std::vector<int>* min_key = &keys[0];
    for (const auto& k : keys)
      if (k < *min_key) min_key = &k;

    std::vector<int> tried;
    for (std::size_t i = 0; i < head.size(); ++i) {
      if (keys[i] != *min_key) continue;
      int v = head[i];
      if (!compute_aut) {
        bool twin = false;
        for (int u : tried) {
          std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
          if ((g.adj[u] & ~pair) == (g.adj[v] & ~pair)) {
            twin = true;
            break;
          }
        }
        if (twin) continue;
        tried.push_back(v);
      }
      int mark = cur_bits;
      Cells next = append_row(cells, v);
      bool child_tight = tight;
      bool prune = false;
      if (have_best && tight) {
        int cmp = compare_range(mark);
        if (cmp > 0) prune = true;
        if (cmp < 0) child_tight = false;
      }
      if (!prune) {
        std::uint64_t version = best_version;
        ++placed;
        descend(next, have_best && child_tight);
        --placed;
        if (best_version != version) tight = true;  // new best has our prefix
      }
      clear_row(mark);
    }
  }
};

CanonicalForm run_labeler(const Graph& g, const std::vector<int>& colors,
                          bool color_prefix, bool compute_aut) {
  if (g.n < 1) throw std::invalid_argument("canonical_form needs n >= 1");
  Cells cells;
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return colors[a] < colors[b]; });
  for (int v : order) {
    if (!cells.empty() && colors[cells.back()[0]] == colors[v])
      cells.back().push_back(v);
    else
      cells.push_back({v});
  }
  CanonicalForm form;
  form.n = g.n;
  if (color_prefix)
    for (const auto& c : cells) {
      form.cert.push_back(static_cast<std::uint64_t>(colors[c[0]]));
      form.cert.push_back(c.size());
    }
  Labeler lab{g, compute_aut};
  int nbits = g.n * (g.n - 1) / 2;
  lab.cur.assign((nbits + 63) / 64, 0);
  if (lab.cur.empty()) lab.cur.push_back(0);
  lab.descend(cells, true);
  form.cert.insert(form.cert.end(), lab.best.begin(),
                   lab.best.begin() + (nbits + 63) / 64);
  if (compute_aut) form.aut_size = lab.best_count;
  return form;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (auto w : cert)
    for (int k = 60; k >= 0; k -= 4) out.push_back(digits[(w >> k) & 15]);
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  return run_labeler(g, std::vector<int>(g.n, 0), false, false);
}

CanonicalForm canonical_form_colored(const Graph& g,
                                     const std::vector<int>& colors,
                                     bool compute_aut) {
  if (static_cast<int>(colors.size()) != g.n)
    throw std::invalid_argument("one color per vertex");
  return run_labeler(g, colors, true, compute_aut);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  auto deg = [](const Graph& g) {
    std::vector<int> d(g.n);
    for (int u = 0; u < g.n; ++u) d[u] = g.degree(u);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (deg(a) != deg(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> dedupe(const std::vector<Graph>& gs) {
  std::vector<Graph> out;
  std::vector<CanonicalForm> seen;
  for (const auto& g : gs) {
    auto c = canonical_form(g);
    bool dup = false;
    for (const auto& s : seen)
      if (s == c) {
        dup = true;
        break;
      }
    if (!dup) {
      seen.push_back(std::move(c));
      out.push_back(g);
    }
  }
  return out;
}

CanonicalForm brute_force_canonical(const Graph& g) {
  if (g.n > 8) throw std::invalid_argument("brute_force_canonical needs n <= 8");
  if (g.n < 1) throw std::invalid_argument("brute_force_canonical needs n >= 1");
  int perm[8];
  std::iota(perm, perm + g.n, 0);
  // at most 28 upper-triangle bits: one word per certificate
  auto word_cert = [&] {
    std::uint64_t w = 0;
    int t = 0;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j, ++t)
        if (g.has_edge(perm[i], perm[j])) w |= std::uint64_t{1} << (63 - t);
    return w;
  };
  std::uint64_t best = word_cert();
  while (std::next_permutation(perm, perm + g.n))
    best = std::min(best, word_cert());
  CanonicalForm form;
  form.n = g.n;
  if (g.n > 1) form.cert.push_back(best);
  return form;
}

std::string graph6_encode(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out.push_back(static_cast<char>(63 + g.n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((g.n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((g.n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (g.n & 63)));
  }
  int val = 0, nb = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      val = val << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(63 + val));
        val = 0;
        nb = 0;
      }
    }
  if (nb) out.push_back(static_cast<char>(63 + (val << (6 - nb))));
  return out;
}

Graph graph6_decode(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  std::size_t pos = 0;
  int n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() < 4) throw std::invalid_argument("truncated graph6 header");
    n = 0;
    for (pos = 1; pos <= 3; ++pos) {
      int c = s[pos] - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("illegal graph6 byte");
      n = n << 6 | c;
    }
  } else {
    n = s[0] - 63;
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph6 order out of range 1..64");
  int nbits = n * (n - 1) / 2;
  std::size_t need = pos + (nbits + 5) / 6;
  if (s.size() != need) throw std::invalid_argument("graph6 length mismatch");
  Graph g;
  g.n = n;
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t) {
      int c = s[pos + t / 6] - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("illegal graph6 byte");
      if (c >> (5 - t % 6) & 1) g.add_edge(i, j);
    }
  return g;
}

}  // namespace girth5
