#include "girth5/linspace.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace girth5 {

namespace {

std::uint64_t block_mask(const std::vector<int>& b) {
  std::uint64_t m = 0;
  for (int p : b) m |= std::uint64_t{1} << p;
  return m;
}

}  // namespace

bool is_prelinear(const LinearSpace& ls) {
  std::vector<std::uint64_t> masks;
  masks.reserve(ls.blocks.size());
  for (const auto& b : ls.blocks) {
    if (b.size() < 2) return false;
    masks.push_back(block_mask(b));
    if (std::popcount(masks.back()) != static_cast<int>(b.size()))
      return false;  // repeated point inside a block
  }
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (std::popcount(masks[i] & masks[j]) > 1) return false;
  return true;
}

PartitionBlocks blocks_from_partition(const Graph& g, const std::vector<int>& v1) {
  std::uint64_t v1mask = 0;
  for (int x : v1) {
    if (x < 0 || x >= g.n) throw std::invalid_argument("v1 vertex out of range");
    v1mask |= std::uint64_t{1} << x;
  }
  PartitionBlocks out;
  out.space.n_points = g.n;
  bool adjacent_pair = false;
  for (int x : v1) {
    std::uint64_t bm = g.adj[x] & ~v1mask;
    if (std::popcount(bm) < 2) continue;
    std::vector<int> block;
    for_each_bit(bm, [&](int p) { block.push_back(p); });
    for (int p : block)
      if (g.adj[p] & bm & ~(std::uint64_t{1} << p)) adjacent_pair = true;
    out.space.blocks.push_back(std::move(block));
  }
  out.valid = is_prelinear(out.space) && !adjacent_pair;
  return out;
}

int packing_upper_bound(int k, int v) {
  if (k < 2 || k > v) throw std::invalid_argument("packing bound needs 2 <= k <= v");
  return v * ((v - 1) / (k - 1)) / k;
}

namespace {

// rows k = 3..6, columns v = 4..28
constexpr int kPackingTable[4][25] = {
    {1, 2, 4, 7, 8, 12, 13, 17, 20, 26, 28, 35, 37, 44, 48, 57, 60, 70, 73,
     83, 88, 100, 104, 117, 121},
    {1, 1, 1, 2, 2, 3, 5, 6, 9, 13, 14, 15, 20, 20, 22, 25, 30, 31, 37, 40,
     42, 50, 52, 54, 63},
    {0, 1, 1, 1, 1, 2, 2, 2, 3, 3, 4, 6, 6, 7, 9, 12, 16, 21, 21, 23, 24,
     30, 30, 30, 33},
    {0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 5, 7, 7, 8, 9, 10, 13,
     14, 16}};

}  // namespace

int packing_lookup(int k, int v) {
  if (k < 3 || k > 6 || v < 4 || v > 28)
    throw std::out_of_range("packing table covers k=3..6, v=4..28");
  return kPackingTable[k - 3][v - 4];
}

RegularityProfile regularity_profile(const LinearSpace& ls) {
  RegularityProfile prof;
  for (int p = 0; p < ls.n_points; ++p) prof.reg[p] = 0;
  for (const auto& b : ls.blocks)
    for (int p : b) ++prof.reg[p];
  for (auto [p, r] : prof.reg) ++prof.deg_counts[r];
  return prof;
}

BlockWeights block_weights(const LinearSpace& ls) {
  if (!is_prelinear(ls)) throw std::invalid_argument("space is not prelinear");
  auto prof = regularity_profile(ls);
  BlockWeights out;
  std::vector<std::uint64_t> masks;
  for (const auto& b : ls.blocks) masks.push_back(block_mask(b));
  int nb = static_cast<int>(ls.blocks.size());
  for (int i = 0; i < nb; ++i) {
    int wt = 0;
    for (int p : ls.blocks[i]) wt += prof.reg[p];
    int meets = 0;
    for (int j = 0; j < nb; ++j)
      if (j != i && (masks[i] & masks[j])) ++meets;
    out.weights.push_back(wt);
    out.intersect_counts.push_back(meets);
    out.weight_sum += wt;
    int sz = static_cast<int>(ls.blocks[i].size());
    if (meets != wt - sz || wt > nb + sz - 1) out.intersect_identity = false;
  }
  for (auto [i, cnt] : prof.deg_counts)
    out.degree_square_sum += static_cast<long long>(i) * i * cnt;
  return out;
}

namespace {

void require_shape(const LinearSpace& ls, int points, int nblocks, int k,
                   bool points_at_most) {
  bool ok = points_at_most ? ls.n_points <= points : ls.n_points == points;
  ok = ok && static_cast<int>(ls.blocks.size()) == nblocks;
  for (const auto& b : ls.blocks) ok = ok && static_cast<int>(b.size()) == k;
  if (!ok) throw std::invalid_argument("space does not match the lemma's shape");
}

}  // namespace

bool check_lemma_12_1(const LinearSpace& ls) {
  require_shape(ls, 12, 8, 4, false);
  std::vector<std::uint64_t> masks;
  for (const auto& b : ls.blocks) masks.push_back(block_mask(b));
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (!(masks[i] & masks[j])) return false;
  return true;
}

Lemma13Result check_lemma_13_1(const LinearSpace& ls) {
  require_shape(ls, 13, 9, 4, false);
  std::vector<std::uint64_t> masks;
  for (const auto& b : ls.blocks) masks.push_back(block_mask(b));
  Lemma13Result res;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (masks[i] & masks[j]) continue;
      ++res.parallel_pair_count;
      for (std::size_t l = 0; l < masks.size(); ++l)
        if (l != i && l != j && !(masks[l] & (masks[i] | masks[j])))
          res.has_3_parallel = true;
    }
  return res;
}

Lemma16Profile check_lemma_16_1(const LinearSpace& ls) {
  require_shape(ls, 16, 6, 5, true);
  auto prof = regularity_profile(ls);
  auto deg = [&](int i) {
    auto it = prof.deg_counts.find(i);
    return it == prof.deg_counts.end() ? 0 : it->second;
  };
  for (auto [r, cnt] : prof.deg_counts)
    if (r > 3 && cnt > 0) return Lemma16Profile::kOther;
  int d1 = deg(1), d2 = deg(2), d3 = deg(3);
  if (d1 == 3 && d2 == 12 && d3 == 1) return Lemma16Profile::kThreeTwelveOne;
  if (d1 == 0 && d2 == 15 && d3 == 0) return Lemma16Profile::kFifteenTwos;
  if (d1 == 2 && d2 == 14 && d3 == 0) return Lemma16Profile::kTwoFourteen;
  return Lemma16Profile::kOther;
}

// ---------------------------------------------------------------------------
// Orderly generation of packings.
//
// A packing is represented as its ascending list of blocks (each block an
// ascending k-tuple, blocks compared lexicographically). Exactly one labeled
// representative per isomorphism class is generated: the lex-least one under
// point relabeling. Lex-least prefixes of lex-least lists are lex-least, so
// pruning non-minimal partial lists is exhaustive.

namespace {

struct MinimalityTest {
  int v = 0, k = 0;
  const std::vector<std::array<int, 8>>* seq = nullptr;  // blocks, ascending
  int m = 0;
  std::array<int, 16> src2dst{};
  std::array<int, 16> dst2src{};
  std::uint32_t used = 0;

  // is there a relabeling sigma with sorted(sigma(seq)) < seq?
  bool run() {
    src2dst.fill(-1);
    dst2src.fill(-1);
    used = 0;
    return smaller(0);
  }

  bool smaller(int i) {
    if (i == m) return false;
    for (int b = 0; b < m; ++b) {
      if (used >> b & 1) continue;
      if (try_block(b, i)) return true;
    }
    return false;
  }

  // Attempt to place block b as the i-th element of the relabeled sequence:
  // succeed outright if its image can be made lexicographically smaller than
  // seq[i], otherwise recurse through every exact match.
  bool try_block(int b, int i) {
    std::array<int, 8> fixed{};
    std::array<int, 8> open{};
    int nfixed = 0, nopen = 0;
    for (int t = 0; t < k; ++t) {
      int p = (*seq)[b][t];
      if (src2dst[p] >= 0)
        fixed[nfixed++] = src2dst[p];
      else
        open[nopen++] = p;
    }
    std::sort(fixed.begin(), fixed.begin() + nfixed);
    return pos_dfs(b, i, 0, fixed.data(), nfixed, open.data(), nopen, -1);
  }

  int free_targets_above(int u) const {
    int cnt = 0;
    for (int t = u + 1; t < v; ++t)
      if (dst2src[t] < 0) ++cnt;
    return cnt;
  }

  // Build the sorted image of block b value by value against target = seq[i].
  // j = position inside the block, prev = previous image value.
  bool pos_dfs(int b, int i, int j, const int* fixed, int nfixed, const int* open,
               int nopen, int prev) {
    if (j == k) {
      used |= std::uint32_t{1} << b;
      bool found = smaller(i + 1);
      used &= ~(std::uint32_t{1} << b);
      return found;
    }
    int t = (*seq)[i][j];
    int fmin = nfixed > 0 ? fixed[0] : v;  // smallest unconsumed fixed image
    // A value below t wins if the rest of the block can still be filled:
    // remaining fixed values stay above it and enough free targets remain.
    int need_free = nopen - (fmin < v && fmin < t ? 0 : 0);  // computed per case
    // case: take the smallest eligible free target u in (prev, min(fmin, t))
    for (int u = prev + 1; u < std::min(fmin, t); ++u) {
      if (dst2src[u] >= 0) continue;
      // u consumed by an open point; nopen-1 more free targets above u needed
      if (free_targets_above(u) >= nopen - 1) return true;
      break;  // larger u only has fewer targets above
    }
    if (fmin < t) {
      // consume the fixed value below t
      need_free = nopen;
      if (free_targets_above(fmin) >= need_free) return true;
      return false;  // image is forced below t but cannot be completed
    }
    // exact match: image value t
    if (fmin == t) {
      return pos_dfs(b, i, j + 1, fixed + 1, nfixed - 1, open, nopen, t);
    }
    if (t <= prev || dst2src[t] >= 0) return false;
    bool found = false;
    for (int oi = 0; oi < nopen && !found; ++oi) {
      int p = open[oi];
      src2dst[p] = t;
      dst2src[t] = p;
      std::array<int, 8> rest{};
      int nrest = 0;
      for (int x = 0; x < nopen; ++x)
        if (x != oi) rest[nrest++] = open[x];
      found = pos_dfs(b, i, j + 1, fixed, nfixed, rest.data(), nrest, t);
      src2dst[p] = -1;
      dst2src[t] = -1;
    }
    return found;
  }
};

struct PackingEnumerator {
  int v, k, nblocks;
  const std::function<bool(const LinearSpace&)>* visit;
  std::vector<std::array<int, 8>> all_blocks;
  std::vector<std::uint64_t> point_masks;
  std::vector<std::vector<std::uint64_t>> compat;  // id -> bitset over ids
  int words = 0;
  std::vector<std::array<int, 8>> chosen;
  std::array<int, 16> reg{};
  int cap = 0;
  bool stopped = false;

  void build_blocks() {
    std::array<int, 8> cur{};
    auto rec = [&](auto&& self, int depth, int next) -> void {
      if (depth == k) {
        all_blocks.push_back(cur);
        std::uint64_t m = 0;
        for (int t = 0; t < k; ++t) m |= std::uint64_t{1} << cur[t];
        point_masks.push_back(m);
        return;
      }
      for (int p = next; p < v; ++p) {
        cur[depth] = p;
        self(self, depth + 1, p + 1);
      }
    };
    rec(rec, 0, 0);
    int n = static_cast<int>(all_blocks.size());
    words = (n + 63) / 64;
    compat.assign(n, std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && std::popcount(point_masks[i] & point_masks[j]) <= 1)
          compat[i][j >> 6] |= std::uint64_t{1} << (j & 63);
  }

  bool minimal() {
    MinimalityTest t;
    t.v = v;
    t.k = k;
    t.seq = &chosen;
    t.m = static_cast<int>(chosen.size());
    return !t.run();
  }

  void emit() {
    LinearSpace ls;
    ls.n_points = v;
    for (const auto& b : chosen)
      ls.blocks.emplace_back(b.begin(), b.begin() + k);
    if (!(*visit)(ls)) stopped = true;
  }

  void dfs(int last, const std::vector<std::uint64_t>& cand) {
    if (stopped) return;
    if (!minimal()) return;
    if (static_cast<int>(chosen.size()) == nblocks) {
      emit();
      return;
    }
    int remaining = nblocks - static_cast<int>(chosen.size());
    int avail = 0;
    for (auto w : cand) avail += std::popcount(w);
    if (avail < remaining) return;
    int slack = 0;
    for (int p = 0; p < v; ++p) slack += cap - reg[p];
    if (slack < k * remaining) return;
    for (int w = 0; w < words && !stopped; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        int id = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        bool over = false;
        for (int t = 0; t < k; ++t)
          if (reg[all_blocks[id][t]] + 1 > cap) over = true;
        if (over) continue;
        std::vector<std::uint64_t> next(words);
        for (int x = 0; x < words; ++x) next[x] = cand[x] & compat[id][x];
        // keep only ids above the one just taken
        next[w] &= ~((std::uint64_t{2} << (id & 63)) - 1);
        for (int x = 0; x < w; ++x) next[x] = 0;
        chosen.push_back(all_blocks[id]);
        for (int t = 0; t < k; ++t) ++reg[all_blocks[id][t]];
        dfs(id, next);
        for (int t = 0; t < k; ++t) --reg[all_blocks[id][t]];
        chosen.pop_back();
        if (stopped) return;
      }
    }
  }
};

}  // namespace

void enumerate_packings(int n_points, int k, int n_blocks,
                        const std::function<bool(const LinearSpace&)>& visit) {
  if (n_points < 2 || n_points > 16 || k < 2 || k > 6 || n_blocks < 1 ||
      n_blocks > 26)
    throw std::invalid_argument(
        "enumerate_packings guarded to n_points <= 16, k <= 6, n_blocks <= 26");
  if (k > n_points) throw std::invalid_argument("block size exceeds point count");
  if (n_blocks > packing_upper_bound(k, n_points)) return;  // counting bound
  PackingEnumerator en;
  en.v = n_points;
  en.k = k;
  en.nblocks = n_blocks;
  en.visit = &visit;
  en.cap = (n_points - 1) / (k - 1);
  en.build_blocks();
  std::vector<std::uint64_t> cand(en.words, ~std::uint64_t{0});
  int nb = static_cast<int>(en.all_blocks.size());
  if (nb % 64) cand[en.words - 1] = (std::uint64_t{1} << (nb % 64)) - 1;
  en.dfs(-1, cand);
}

std::vector<LinearSpace> enumerate_packings(int n_points, int k, int n_blocks) {
  std::vector<LinearSpace> out;
  enumerate_packings(n_points, k, n_blocks, [&](const LinearSpace& ls) {
    out.push_back(ls);
    return true;
  });
  return out;
}

}  // namespace girth5
