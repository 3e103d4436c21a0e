#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "spexlab/graph.hpp"

// Brute-force oracles, deliberately independent of the library's search code:
// they enumerate permutations, injections, or subsets outright. Keep orders
// tiny; every caller is responsible for staying within the noted caps.

inline spexlab::Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  spexlab::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Relabeling with vertex u of the result wired like vertex perm[u] of g.
inline spexlab::Graph apply_perm(const spexlab::Graph& g, const std::vector<int>& perm) {
  spexlab::Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.edge(perm[u], perm[v])) h.add_edge(u, v);
  return h;
}

inline bool naive_is_isomorphic(const spexlab::Graph& a, const spexlab::Graph& b) {  // n <= 8
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u)
      for (int v = u + 1; v < a.order() && ok; ++v)
        if (a.edge(u, v) != b.edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool naive_contains_rec(const spexlab::Graph& host, const spexlab::Graph& pat,
                               std::vector<int>& img, std::vector<bool>& used) {
  int k = static_cast<int>(img.size());
  if (k == pat.order()) return true;
  for (int w = 0; w < host.order(); ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u = 0; u < k && ok; ++u)
      if (pat.edge(u, k) && !host.edge(img[u], w)) ok = false;
    if (!ok) continue;
    used[w] = true;
    img.push_back(w);
    if (naive_contains_rec(host, pat, img, used)) return true;
    img.pop_back();
    used[w] = false;
  }
  return false;
}

// All injections pattern -> host, edge-preserving (not induced). |pat| <= 5, |host| <= 8.
inline bool naive_contains(const spexlab::Graph& host, const spexlab::Graph& pat) {
  if (pat.order() > host.order()) return false;
  std::vector<int> img;
  std::vector<bool> used(host.order(), false);
  return naive_contains_rec(host, pat, img, used);
}

inline bool naive_colorable(const spexlab::Graph& g, int k, std::vector<int>& col, int v) {
  if (v == g.order()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (g.edge(u, v) && col[u] == c) ok = false;
    if (!ok) continue;
    col[v] = c;
    if (naive_colorable(g, k, col, v + 1)) return true;
  }
  col[v] = -1;
  return false;
}

inline int naive_chromatic(const spexlab::Graph& g) {  // n <= 8
  if (g.order() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> col(g.order(), -1);
    if (naive_colorable(g, k, col, 0)) return k;
  }
}

// Least upper-triangle bit mask over all relabelings: a canonical form by
// sheer enumeration. Bit i covers the i-th pair in column-major order. n <= 8.
inline std::uint64_t naive_min_mask(const spexlab::Graph& g) {
  int n = g.order();
  std::vector<std::array<int, 2>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.push_back({u, v});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (g.edge(perm[pairs[i][0]], perm[pairs[i][1]])) m |= 1ull << i;
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Number of isomorphism classes on n vertices by generating all labeled graphs
// and deduplicating with naive_min_mask. n <= 6.
inline int naive_class_count(int n) {
  std::vector<std::array<int, 2>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.push_back({u, v});
  int m = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> pidx(n, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i) pidx[pairs[i][0]][pairs[i][1]] = pidx[pairs[i][1]][pairs[i][0]] = i;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> maps;
  do {
    std::vector<int> mp(m);
    for (int i = 0; i < m; ++i) mp[i] = pidx[perm[pairs[i][0]]][perm[pairs[i][1]]];
    maps.push_back(std::move(mp));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::unordered_set<std::uint64_t> classes;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::uint64_t best = ~0ull;
    for (const auto& mp : maps) {
      std::uint64_t t = 0;
      for (int i = 0; i < m; ++i)
        if ((mask >> mp[i]) & 1) t |= 1ull << i;
      best = std::min(best, t);
    }
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

// Largest adjacency eigenvalue by cyclic Jacobi sweeps on the dense matrix.
// Independent of the library's power iteration. n <= 20.
inline double naive_rho(const spexlab::Graph& g) {
  int n = g.order();
  if (n == 0) return 0.0;
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.edge(u, v)) a[u][v] = a[v][u] = 1.0;
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-18) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  double best = a[0][0];
  for (int i = 1; i < n; ++i) best = std::max(best, a[i][i]);
  return best;
}

inline int naive_independence(const spexlab::Graph& g) {  // n <= 14
  int n = g.order();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool ok = true;
    int cnt = 0;
    for (int v = 0; v < n && ok; ++v)
      if ((mask >> v) & 1) {
        ++cnt;
        if (g.row(v).w[0] & mask) ok = false;
      }
    if (ok) best = std::max(best, cnt);
  }
  return best;
}

inline int naive_matching_rec(const spexlab::Graph& g, spexlab::VertexSet avail) {
  int u = -1;
  for (int v = avail.min(); v != -1; v = avail.next(v + 1))
    if ((g.row(v) & avail).count() > 0) {
      u = v;
      break;
    }
  if (u == -1) return 0;
  avail.reset(u);
  int best = naive_matching_rec(g, avail);
  spexlab::VertexSet nb = g.row(u) & avail;
  for (int v = nb.min(); v != -1; v = nb.next(v + 1)) {
    spexlab::VertexSet rest = avail;
    rest.reset(v);
    best = std::max(best, 1 + naive_matching_rec(g, rest));
  }
  return best;
}

inline int naive_matching(const spexlab::Graph& g) {  // n <= 9
  return naive_matching_rec(g, spexlab::VertexSet::range(g.order()));
}
