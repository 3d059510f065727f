#include "girth5/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "girth5/canonical.hpp"

namespace girth5 {

namespace {

struct Candidate {
  int u = 0, v = 0;
};

// Involution of the vertex set that fixes the search problem; acts on
// candidate positions.
struct Generator {
  std::vector<int> pos_map;
};

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct CertLess {
  bool operator()(const CanonicalForm& a, const CanonicalForm& b) const {
    return a < b;
  }
};

struct Engine {
  const SearchProblem& p;
  int n = 0;
  int delta = 0, Delta = 0;
  Graph base;
  std::vector<int> req;  // per-vertex minimum final degree
  std::vector<Candidate> cands;
  int N = 0;
  std::vector<Generator> gens;
  bool use_girth_prune, use_cap_prune, use_feas_prune, use_forbidden, use_sym;
  bool no_cap_cap_edge = false;  // some constraint forbids cap-cap edges

  // state
  Graph cur;
  std::vector<std::uint8_t> dec;
  std::array<int, kMaxVertices> deg{};
  std::array<int, kMaxVertices> avail{};
  std::array<std::uint64_t, kMaxVertices> und{};  // undecided partners
  int edges_cur = 0;
  int sum_deficit = 0;
  int sum_slack = 0;
  // with Delta == delta+1 the degree histogram is forced by edge counting:
  // exactly 2e - delta*v vertices end at the cap
  int forced_hi = -1;
  int cnt_at_cap = 0;
  int cnt_done_low = 0;  // no open slots left, finished below the cap
  // per-level, per-generator comparison frontier; ~0 marks a dead generator
  std::vector<std::int32_t> sym_t;
  std::uint64_t nodes = 0;
  std::uint64_t budget_share = 0;
  bool exhausted = true;
  std::vector<std::pair<CanonicalForm, Graph>> found;

  explicit Engine(const SearchProblem& prob) : p(prob) { build(); }

  Engine(const Engine& o) : p(o.p) { build(); }

  void build() {
    n = p.v;
    delta = p.pair.delta;
    Delta = p.pair.Delta;
    use_girth_prune = !(p.disabled_prunes & kPruneGirth);
    use_cap_prune = !(p.disabled_prunes & kPruneDegreeCap);
    use_feas_prune = !(p.disabled_prunes & kPruneFeasibility);
    use_forbidden = !(p.disabled_prunes & kPruneForbidden);
    use_sym = !(p.disabled_prunes & kPruneSymmetry);
    for (const auto& c : p.edge_counts)
      if (c.deg_a == p.pair.Delta && c.deg_b == p.pair.Delta && c.max_count == 0)
        no_cap_cap_edge = true;

    req.assign(n, delta);
    std::vector<std::uint64_t> nonadj_masks;
    for (const auto& set : p.nonadjacent_sets) {
      std::uint64_t m = 0;
      for (int x : set) {
        if (x < 0 || x >= n) throw std::invalid_argument("nonadjacent vertex out of range");
        m |= bit(x);
      }
      nonadj_masks.push_back(m);
    }
    auto pair_forbidden = [&](int a, int b) {
      for (auto m : nonadj_masks)
        if ((m >> a & 1) && (m >> b & 1)) return true;
      return false;
    };

    if (p.star) {
      StarPrefix pre = fix_star_prefix(p);
      base = pre.g;
      int first_free = pre.first_free;
      int D = p.star->center_degree;
      for (int c = 1; c <= D; ++c)
        req[c] = std::max(delta, pre.child_quota[c - 1] + 1);
      req[0] = D;
      // candidates: grandchild pairs across blocks, child-free when the
      // child still has headroom, anything among grandchildren and frees
      std::vector<int> owner(n, -1);
      for (int c = 0; c < D; ++c)
        for (int g = pre.blocks[c].first; g < pre.blocks[c].second; ++g)
          owner[g] = c;
      for (int u = 1; u < n; ++u)
        for (int v2 = u + 1; v2 < n; ++v2) {
          bool u_child = u <= D, v_child = v2 <= D;
          if (u_child && v_child) continue;
          if (u_child && v2 < first_free) continue;  // child-grandchild: girth
          if (u_child && pre.child_quota[u - 1] + 1 >= Delta) continue;
          if (!u_child && v2 < first_free && owner[u] == owner[v2]) continue;
          if (use_forbidden && pair_forbidden(u, v2)) continue;
          cands.push_back({u, v2});
        }
      N = static_cast<int>(cands.size());
      build_generators(pre, nonadj_masks);
    } else {
      base.n = n;
      for (int u = 0; u < n; ++u)
        for (int v2 = u + 1; v2 < n; ++v2) {
          if (use_forbidden && pair_forbidden(u, v2)) continue;
          cands.push_back({u, v2});
        }
      N = static_cast<int>(cands.size());
      StarPrefix none;
      build_generators(none, nonadj_masks);
    }
    sym_t.assign(static_cast<std::size_t>(N + 1) * std::max<std::size_t>(1, gens.size()), 0);
    reset();
  }

  void add_generator_if_valid(const std::vector<int>& perm,
                              const std::vector<std::uint64_t>& nonadj_masks) {
    // must fix the base graph, the candidate set, requirements, and every
    // forced independent set
    for (int u = 0; u < n; ++u) {
      if (req[perm[u]] != req[u]) return;
      std::uint64_t img = 0;
      for_each_bit(base.adj[u], [&](int w) { img |= bit(perm[w]); });
      if (img != base.adj[perm[u]]) return;
    }
    for (auto m : nonadj_masks) {
      std::uint64_t img = 0;
      for_each_bit(m, [&](int w) { img |= bit(perm[w]); });
      if (img != m) return;
    }
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (int i = 0; i < N; ++i) index[cands[i].u][cands[i].v] = i;
    Generator g;
    g.pos_map.resize(N);
    for (int i = 0; i < N; ++i) {
      int a = perm[cands[i].u], b = perm[cands[i].v];
      if (a > b) std::swap(a, b);
      int j = index[a][b];
      if (j < 0) return;  // permutes candidates out of the set
      g.pos_map[i] = j;
    }
    gens.push_back(std::move(g));
  }

  void build_generators(const StarPrefix& pre,
                        const std::vector<std::uint64_t>& nonadj_masks) {
    auto transposition = [&](int a, int b) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::swap(perm[a], perm[b]);
      return perm;
    };
    if (!p.star) {
      if (n <= 12) {
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            add_generator_if_valid(transposition(a, b), nonadj_masks);
      } else {
        for (int a = 0; a + 1 < n; ++a)
          add_generator_if_valid(transposition(a, a + 1), nonadj_masks);
      }
      return;
    }
    int D = p.star->center_degree;
    // grandchild swaps inside a block
    for (int c = 0; c < D; ++c)
      for (int a = pre.blocks[c].first; a < pre.blocks[c].second; ++a)
        for (int b = a + 1; b < pre.blocks[c].second; ++b)
          add_generator_if_valid(transposition(a, b), nonadj_masks);
    // free-vertex swaps
    for (int a = pre.first_free; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        add_generator_if_valid(transposition(a, b), nonadj_masks);
    // equal-quota child swaps carry their blocks along
    for (int c1 = 0; c1 < D; ++c1)
      for (int c2 = c1 + 1; c2 < D; ++c2) {
        if (pre.child_quota[c1] != pre.child_quota[c2]) continue;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::swap(perm[c1 + 1], perm[c2 + 1]);
        for (int t = 0; t < pre.child_quota[c1]; ++t) {
          int a = pre.blocks[c1].first + t, b = pre.blocks[c2].first + t;
          std::swap(perm[a], perm[b]);
        }
        add_generator_if_valid(perm, nonadj_masks);
      }
  }

  void reset() {
    cur = base;
    dec.assign(N, 0);
    sum_deficit = 0;
    sum_slack = 0;
    und.fill(0);
    for (int u = 0; u < n; ++u) {
      deg[u] = base.degree(u);
      avail[u] = 0;
    }
    for (const auto& c : cands) {
      ++avail[c.u];
      ++avail[c.v];
      und[c.u] |= bit(c.v);
      und[c.v] |= bit(c.u);
    }
    edges_cur = base.edge_count();
    forced_hi = Delta == delta + 1 ? 2 * p.e_target - delta * n : -1;
    cnt_at_cap = 0;
    cnt_done_low = 0;
    for (int u = 0; u < n; ++u) {
      sum_deficit += std::max(0, req[u] - deg[u]);
      sum_slack += std::min(Delta - deg[u], avail[u]);
      if (deg[u] >= Delta)
        ++cnt_at_cap;
      else if (avail[u] == 0)
        ++cnt_done_low;
    }
    if (!gens.empty())
      std::fill(sym_t.begin(), sym_t.begin() + gens.size(), 0);
  }

  // x just reached the cap: any neighbour already there seals a cap-cap edge
  bool cap_cap_violation(int x) const {
    if (deg[x] != Delta) return false;
    bool viol = false;
    for_each_bit(cur.adj[x], [&](int w) {
      if (deg[w] >= Delta) viol = true;
    });
    return viol;
  }

  bool girth_ok(int u, int v) const {
    if (cur.adj[u] & cur.adj[v]) return false;  // common neighbour
    bool clean = true;
    for_each_bit(cur.adj[u], [&](int w) {
      if (cur.adj[w] & cur.adj[v]) clean = false;
    });
    return clean;  // no u..v path of length 3 either
  }

  // Blocked pairs stay blocked, so the undecided partners still at distance
  // >= 4 bound the degree a deficient vertex can reach.
  bool live_slots_ok() const {
    for (int w = 0; w < n; ++w) {
      int need = req[w] - deg[w];
      if (need <= 0) continue;
      int live = 0;
      std::uint64_t rest = und[w];
      while (rest && live < need) {
        int x = std::countr_zero(rest);
        rest &= rest - 1;
        if (girth_ok(w, x)) ++live;
      }
      if (live < need) return false;
    }
    return true;
  }

  void touch(int u, int ddeg, int davail) {
    sum_deficit -= std::max(0, req[u] - deg[u]);
    sum_slack -= std::min(Delta - deg[u], avail[u]);
    if (deg[u] >= Delta)
      --cnt_at_cap;
    else if (avail[u] == 0)
      --cnt_done_low;
    deg[u] += ddeg;
    avail[u] += davail;
    sum_deficit += std::max(0, req[u] - deg[u]);
    sum_slack += std::min(Delta - deg[u], avail[u]);
    if (deg[u] >= Delta)
      ++cnt_at_cap;
    else if (avail[u] == 0)
      ++cnt_done_low;
  }

  // Try to decide position k; returns false (state untouched) if the branch
  // is pruned.
  bool step(int k, int val) {
    ++nodes;
    const auto [u, v] = cands[k];
    if (val) {
      if (use_cap_prune && (deg[u] >= Delta || deg[v] >= Delta)) return false;
      if (edges_cur >= p.e_target) return false;  // the edge budget is hard
      if (use_girth_prune && !girth_ok(u, v)) return false;
      cur.add_edge(u, v);
      ++edges_cur;
      touch(u, 1, -1);
      touch(v, 1, -1);
      und[u] &= ~bit(v);
      und[v] &= ~bit(u);
      dec[k] = 1;
      if (use_forbidden && no_cap_cap_edge &&
          (cap_cap_violation(u) || cap_cap_violation(v))) {
        unstep(k);
        return false;
      }
      if (use_feas_prune && use_girth_prune && !live_slots_ok()) {
        unstep(k);
        return false;
      }
    } else {
      touch(u, 0, -1);
      touch(v, 0, -1);
      und[u] &= ~bit(v);
      und[v] &= ~bit(u);
      dec[k] = 0;
    }
    if (use_feas_prune) {
      int needed = p.e_target - edges_cur;
      int remaining = N - k - 1;
      bool bad = needed < 0 || needed > remaining || sum_deficit > 2 * needed ||
                 (use_cap_prune && 2 * needed > sum_slack) ||
                 std::max(0, req[u] - deg[u]) > avail[u] ||
                 std::max(0, req[v] - deg[v]) > avail[v];
      if (!bad && forced_hi >= 0 && use_cap_prune)
        bad = cnt_at_cap > forced_hi || cnt_done_low > n - forced_hi;
      if (bad) {
        unstep(k);
        return false;
      }
    } else {
      // even without the feasibility prune the edge budget is a hard bound
      if (p.e_target - edges_cur < 0 || p.e_target - edges_cur > N - k - 1) {
        unstep(k);
        return false;
      }
    }
    if (use_sym && !gens.empty() && !sym_advance(k)) {
      unstep(k);
      return false;
    }
    return true;
  }

  void unstep(int k) {
    const auto [u, v] = cands[k];
    if (dec[k]) {
      cur.remove_edge(u, v);
      --edges_cur;
      touch(u, -1, 1);
      touch(v, -1, 1);
    } else {
      touch(u, 0, 1);
      touch(v, 0, 1);
    }
    und[u] |= bit(v);
    und[v] |= bit(u);
    dec[k] = 0;
  }

  // Lex-leader pruning: kill the branch when some generator proves that every
  // completion of the current prefix has a smaller image.
  bool sym_advance(int k) {
    std::size_t G = gens.size();
    const std::int32_t* prev = sym_t.data() + static_cast<std::size_t>(k) * G;
    std::int32_t* curr = sym_t.data() + static_cast<std::size_t>(k + 1) * G;
    for (std::size_t gi = 0; gi < G; ++gi) {
      std::int32_t t = prev[gi];
      if (t < 0) {  // dead
        curr[gi] = t;
        continue;
      }
      const auto& pm = gens[gi].pos_map;
      while (t <= k) {
        int q = pm[t];
        if (q > k) break;
        if (dec[q] < dec[t]) return false;  // image smaller: prune
        if (dec[q] > dec[t]) {
          t = -1;  // image larger whatever follows
          break;
        }
        ++t;
      }
      curr[gi] = t;
    }
    return true;
  }

  void validate_and_emit() {
    if (edges_cur != p.e_target) return;
    auto prof = degree_profile(cur);
    if (prof.delta != delta || prof.Delta != Delta) return;
    if (!girth_at_least_5(cur)) return;
    for (const auto& set : p.nonadjacent_sets)
      for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
          if (cur.has_edge(set[i], set[j])) return;
    for (const auto& c : p.edge_counts) {
      int count = 0;
      for (int u = 0; u < n; ++u)
        for_each_bit(cur.adj[u] >> u, [&](int rel) {
          int v2 = u + rel;
          int a = deg[u], b = deg[v2];
          if ((a == c.deg_a && b == c.deg_b) || (a == c.deg_b && b == c.deg_a))
            ++count;
        });
      if (count < c.min_count || count > c.max_count) return;
    }
    if (p.star) {
      auto centers = embedded_star_centers(cur, *p.star);
      if (std::find(centers.begin(), centers.end(), 0) == centers.end()) return;
    }
    for (const auto& spec : p.absent_stars)
      if (!embedded_star_centers(cur, spec).empty()) return;
    found.emplace_back(canonical_form(cur), cur);
  }

  bool budget_hit() {
    if (budget_share && nodes >= budget_share) {
      exhausted = false;
      return true;
    }
    return false;
  }

  void dfs(int k) {
    if (budget_hit()) return;
    if (k == N) {
      validate_and_emit();
      return;
    }
    int needed = p.e_target - edges_cur;
    int remaining = N - k;
    if (needed == 0) {
      if (sum_deficit == 0) validate_and_emit();
      if (use_feas_prune) return;
    }
    if (needed == remaining && use_feas_prune) {
      all_present_tail(k);
      return;
    }
    int first = 2 * needed >= remaining ? 0 : 1;
    for (int attempt = 0; attempt < 2; ++attempt) {
      int val = attempt == 0 ? first : 1 - first;
      if (step(k, val)) {
        dfs(k + 1);
        unstep(k);
      }
      if (budget_hit()) return;
    }
  }

  // every remaining candidate must be an edge
  void all_present_tail(int k) {
    int applied = 0;
    bool ok = true;
    for (int i = k; i < N && ok; ++i) {
      if (step(i, 1))
        ++applied;
      else
        ok = false;
    }
    if (ok) validate_and_emit();
    for (int i = k + applied - 1; i >= k; --i) unstep(i);
  }

  bool replay(const std::vector<std::uint8_t>& prefix) {
    reset();
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (!step(static_cast<int>(i), prefix[i])) return false;
    return true;
  }
};

}  // namespace

StarPrefix fix_star_prefix(const SearchProblem& p) {
  if (!p.star) throw std::invalid_argument("no star in problem");
  const auto& spec = *p.star;
  if (spec.vertex_budget() > p.v)
    throw std::invalid_argument("star does not fit in v vertices");
  StarPrefix pre;
  pre.g.n = p.v;
  int D = spec.center_degree;
  pre.child_quota = spec.child_reqs;  // already sorted descending
  int next = D + 1;
  for (int c = 0; c < D; ++c) {
    pre.g.add_edge(0, c + 1);
    pre.blocks.emplace_back(next, next + pre.child_quota[c]);
    for (int t = 0; t < pre.child_quota[c]; ++t) pre.g.add_edge(c + 1, next++);
  }
  pre.first_grandchild = D + 1;
  pre.first_free = next;
  return pre;
}

SearchReport search(const SearchProblem& p) {
  if (p.v < 1 || p.v > kMaxVertices)
    throw std::invalid_argument("search order out of range 1..64");
  if (p.star && p.star->center_degree != p.pair.Delta)
    throw std::invalid_argument("star center degree must equal Delta");
  if (p.v >= 20 && p.v <= 33 && p.e_target > f_lookup(p.v))
    throw std::invalid_argument("edge target above the extremal table");
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;

  Engine root(p);
  int jobs = std::max(1, p.jobs);
  std::vector<std::pair<CanonicalForm, Graph>> all;
  std::uint64_t nodes = 0;
  bool exhausted = true;

  if (jobs == 1 || root.N == 0) {
    root.budget_share = p.node_budget;
    root.dfs(0);
    all = std::move(root.found);
    nodes = root.nodes;
    exhausted = root.exhausted;
  } else {
    // split the tree: grow a frontier of decision prefixes, then let workers
    // finish the subtrees
    std::vector<std::vector<std::uint8_t>> frontier{{}};
    std::vector<std::vector<std::uint8_t>> leaves;
    std::size_t want = static_cast<std::size_t>(32) * jobs;
    while (frontier.size() < want) {
      std::vector<std::vector<std::uint8_t>> next;
      bool grew = false;
      for (auto& pre : frontier) {
        if (static_cast<int>(pre.size()) == root.N) {
          leaves.push_back(pre);
          continue;
        }
        for (int val : {1, 0}) {
          if (!root.replay(pre)) break;  // prefix itself invalid (cannot happen)
          if (root.step(static_cast<int>(pre.size()), val)) {
            auto ext = pre;
            ext.push_back(static_cast<std::uint8_t>(val));
            next.push_back(std::move(ext));
            grew = true;
          }
        }
      }
      if (!grew) break;
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    for (auto& pre : leaves) {
      if (root.replay(pre)) root.validate_and_emit();
    }
    all = std::move(root.found);
    nodes = root.nodes;

    std::atomic<std::size_t> cursor{0};
    std::atomic<std::uint64_t> shared_nodes{0};
    std::atomic<bool> shared_exhausted{true};
    std::vector<std::vector<std::pair<CanonicalForm, Graph>>> results(jobs);
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        Engine eng(p);
        eng.budget_share = p.node_budget ? p.node_budget / jobs + 1 : 0;
        std::uint64_t local_nodes = 0;
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= frontier.size()) break;
          if (eng.replay(frontier[i])) eng.dfs(static_cast<int>(frontier[i].size()));
          if (!eng.exhausted) shared_exhausted = false;
        }
        local_nodes = eng.nodes;
        for (auto& f : eng.found) results[w].push_back(std::move(f));
        shared_nodes += local_nodes;
      });
    for (auto& t : pool) t.join();
    nodes += shared_nodes;
    exhausted = shared_exhausted;
    for (auto& r : results)
      for (auto& f : r) all.push_back(std::move(f));
  }

  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < all.size(); ++i)
    if (i == 0 || !(all[i].first == all[i - 1].first))
      rep.solutions.push_back(all[i].second);
  rep.nodes_explored = nodes;
  rep.exhausted = exhausted;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ExtremalResult brute_force_extremal(int v) {
  if (v < 1 || v > 10)
    throw std::invalid_argument("brute_force_extremal needs v <= 10");
  std::vector<Graph> layer{make_graph(1, {})};
  for (int k = 2; k <= v; ++k) {
    std::map<CanonicalForm, Graph, CertLess> next;
    for (const auto& g : layer) {
      // far[u]: vertices at distance >= 3 from u (attachment sets must be
      // pairwise that far apart to keep girth >= 5)
      auto dist = distance_matrix(g);
      std::array<std::uint64_t, kMaxVertices> far{};
      for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
          if (a != b && (dist[a][b] == kUnreachable || dist[a][b] >= 3))
            far[a] |= bit(b);
      Graph ext = g;
      ext.n = k;
      auto attach = [&](auto&& self, std::uint64_t chosen,
                        std::uint64_t allowed) -> void {
        Graph h = ext;
        for_each_bit(chosen, [&](int u) { h.add_edge(u, k - 1); });
        next.emplace(canonical_form(h), h);
        for_each_bit(allowed, [&](int u) {
          std::uint64_t above = u == 63 ? 0 : ~((std::uint64_t{2} << u) - 1);
          self(self, chosen | bit(u), allowed & far[u] & above);
        });
      };
      attach(attach, 0, g.vertex_mask());
    }
    layer.clear();
    for (auto& [c, g] : next) layer.push_back(g);
  }
  ExtremalResult res;
  for (const auto& g : layer) res.max_edges = std::max(res.max_edges, g.edge_count());
  for (const auto& g : layer)
    if (g.edge_count() == res.max_edges) res.graphs.push_back(g);
  return res;
}

}  // namespace girth5
