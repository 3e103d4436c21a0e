#include "spexlab/subgraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace spexlab {

namespace {

// Interchangeable host vertices: equal adjacency outside the pair, whether or
// not the pair itself is an edge. Swapping such a pair is an automorphism, so
// a failed branch need not be retried on the twin.
bool twins(const Graph& g, int u, int v) {
  VertexSet pair_mask = VertexSet::of({u, v});
  return (g.row(u) - pair_mask) == (g.row(v) - pair_mask);
}

struct Matcher {
  const Graph& host;
  const Graph& pat;
  std::vector<int> order;      // pattern vertices, most-anchored first
  std::vector<int> assign;     // pattern vertex -> host vertex, -1 while free
  VertexSet used;

  Matcher(const Graph& h, const Graph& p) : host(h), pat(p) {
    int np = pat.order();
    assign.assign(np, -1);
    std::vector<bool> placed(np, false);
    std::vector<int> anchored(np, 0);
    for (int step = 0; step < np; ++step) {
      int pick = -1;
      for (int v = 0; v < np; ++v) {
        if (placed[v]) continue;
        if (pick < 0 || anchored[v] > anchored[pick] ||
            (anchored[v] == anchored[pick] && pat.degree(v) > pat.degree(pick)))
          pick = v;
      }
      placed[pick] = true;
      order.push_back(pick);
      for (int v = pat.row(pick).min(); v >= 0; v = pat.row(pick).next(v + 1)) ++anchored[v];
    }
  }

  bool extend(size_t depth) {
    if (depth == order.size()) return true;
    int pv = order[depth];
    VertexSet cand = host.vertices() - used;
    for (int q = pat.row(pv).min(); q >= 0; q = pat.row(pv).next(q + 1))
      if (assign[q] >= 0) cand = cand & host.row(assign[q]);
    int pdeg = pat.degree(pv);
    std::vector<int> tried;
    for (int hv = cand.min(); hv >= 0; hv = cand.next(hv + 1)) {
      if (host.degree(hv) < pdeg) continue;
      bool dup = false;
      for (int u : tried)
        if (twins(host, u, hv)) {
          dup = true;
          break;
        }
      if (dup) continue;
      tried.push_back(hv);
      assign[pv] = hv;
      used.set(hv);
      if (extend(depth + 1)) return true;
      used.reset(hv);
      assign[pv] = -1;
    }
    return false;
  }
};

bool degree_dominance(const Graph& host, const Graph& pat) {
  std::vector<int> hd, pd;
  for (int v = 0; v < host.order(); ++v) hd.push_back(host.degree(v));
  for (int v = 0; v < pat.order(); ++v) pd.push_back(pat.degree(v));
  std::sort(hd.rbegin(), hd.rend());
  std::sort(pd.rbegin(), pd.rend());
  for (size_t i = 0; i < pd.size(); ++i)
    if (pd[i] > hd[i]) return false;
  return true;
}

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern, Embedding* witness) {
  if (pattern.order() == 0) {
    if (witness) witness->map.clear();
    return true;
  }
  if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return false;
  if (!degree_dominance(host, pattern)) return false;
  Matcher m(host, pattern);
  if (!m.extend(0)) return false;
  if (witness) witness->map = m.assign;
  return true;
}

ForbiddenFamily make_family(std::vector<Graph> members) {
  if (members.empty()) throw std::invalid_argument("empty family");
  for (const Graph& g : members)
    if (g.order() == 0) throw std::invalid_argument("family member with no vertices");
  std::sort(members.begin(), members.end(), [](const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.edge_count() < b.edge_count();
  });
  ForbiddenFamily fam;
  fam.members = std::move(members);
  int min_chi = -1;
  for (const Graph& g : fam.members) {
    fam.t = std::max(fam.t, g.order());
    int chi = chromatic_number(g);
    if (min_chi < 0 || chi < min_chi) min_chi = chi;
  }
  fam.r = min_chi - 1;
  fam.theorem_ready = fam.r >= 2;
  return fam;
}

bool is_family_free(const Graph& g, const ForbiddenFamily& fam) {
  for (const Graph& f : fam.members)
    if (contains_subgraph(g, f)) return false;
  return true;
}

namespace {

struct MisSolver {
  const Graph& g;
  int best = 0;

  void run(VertexSet active, int size) {
    int cnt = active.count();
    if (size + cnt <= best) return;
    int pick = -1, pick_deg = -1;
    for (int v = active.min(); v >= 0; v = active.next(v + 1)) {
      int d = (g.row(v) & active).count();
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (pick < 0) {
      best = std::max(best, size);
      return;
    }
    if (pick_deg == 0) {  // active is independent
      best = std::max(best, size + cnt);
      return;
    }
    VertexSet incl = active - g.row(pick);
    incl.reset(pick);
    run(incl, size + 1);
    VertexSet excl = active;
    excl.reset(pick);
    run(excl, size);
  }
};

int greedy_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<VertexSet> classes;
  for (int step = 0; step < n; ++step) {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      int sat = 0;
      for (const VertexSet& cl : classes)
        if (cl.intersects(g.row(v))) ++sat;
      int d = g.degree(v);
      if (sat > pick_sat || (sat == pick_sat && d > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = d;
      }
    }
    int c = 0;
    while (c < static_cast<int>(classes.size()) && classes[c].intersects(g.row(pick))) ++c;
    if (c == static_cast<int>(classes.size())) classes.emplace_back();
    classes[c].set(pick);
    color[pick] = c;
  }
  return static_cast<int>(classes.size());
}

bool k_colorable(const Graph& g, int k, std::vector<int>& color, int used) {
  int n = g.order();
  int pick = -1, pick_sat = -1, pick_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (color[v] >= 0) continue;
    VertexSet seen;
    int sat = 0;
    for (int u = g.row(v).min(); u >= 0; u = g.row(v).next(u + 1))
      if (color[u] >= 0 && !seen.test(color[u])) {
        seen.set(color[u]);
        ++sat;
      }
    int d = g.degree(v);
    if (sat > pick_sat || (sat == pick_sat && d > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = d;
    }
  }
  if (pick < 0) return true;
  int limit = std::min(k, used + 1);  // a fresh color only as the next index
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int u = g.row(pick).min(); u >= 0 && ok; u = g.row(pick).next(u + 1))
      ok = color[u] != c;
    if (!ok) continue;
    color[pick] = c;
    if (k_colorable(g, k, color, std::max(used, c + 1))) return true;
    color[pick] = -1;
  }
  return false;
}

int chromatic_connected(const Graph& g) {
  if (g.order() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  int lb = clique_number(g);
  int ub = greedy_colors(g);
  for (int k = lb; k < ub; ++k) {
    std::vector<int> color(g.order(), -1);
    if (k_colorable(g, k, color, 0)) return k;
  }
  return ub;
}

}  // namespace

int independence_number(const Graph& g) {
  MisSolver s{g};
  s.run(g.vertices(), 0);
  return s.best;
}

int clique_number(const Graph& g) { return independence_number(complement(g)); }

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  // components of the complement are joined to each other, so colors add
  std::vector<VertexSet> parts = components(complement(g));
  if (parts.size() == 1) return chromatic_connected(g);
  int total = 0;
  for (const VertexSet& p : parts) total += chromatic_number(induced_subgraph(g, p));
  return total;
}

namespace {

struct VsHash {
  size_t operator()(const VertexSet& s) const {
    return std::hash<std::uint64_t>()(s.w[0] * 1099511628211ull ^ s.w[1]);
  }
};

int matching_rec(const Graph& g, VertexSet active,
                 std::unordered_map<VertexSet, int, VsHash>& memo) {
  int pick = -1;
  for (int v = active.min(); v >= 0; v = active.next(v + 1))
    if ((g.row(v) & active).count() > 0) {
      pick = v;
      break;
    }
  if (pick < 0) return 0;
  if (auto it = memo.find(active); it != memo.end()) return it->second;
  VertexSet rest = active;
  rest.reset(pick);
  int best = matching_rec(g, rest, memo);  // leave pick unmatched
  for (int u = (g.row(pick) & active).min(); u >= 0; u = (g.row(pick) & active).next(u + 1)) {
    VertexSet sub = rest;
    sub.reset(u);
    best = std::max(best, 1 + matching_rec(g, sub, memo));
  }
  memo.emplace(active, best);
  return best;
}

}  // namespace

int matching_number(const Graph& g) {
  std::unordered_map<VertexSet, int, VsHash> memo;
  return matching_rec(g, g.vertices(), memo);
}

int q_value(const ForbiddenFamily& fam) {
  if (fam.r < 1) throw std::invalid_argument("q needs family r >= 1");
  for (int s = 0; s <= fam.t; ++s) {
    Graph host = join({empty_graph(s), turan_graph(fam.t * fam.r, fam.r)});
    for (const Graph& f : fam.members)
      if (contains_subgraph(host, f)) return s;
  }
  throw std::logic_error("q exceeded family order bound");
}

IntersectionBound intersection_lower_bound(const std::vector<std::vector<int>>& sets) {
  if (sets.size() < 2) throw std::invalid_argument("needs at least two sets");
  std::set<int> uni(sets[0].begin(), sets[0].end());
  std::set<int> inter = uni;
  long sum = 0;
  for (const std::vector<int>& s : sets) {
    std::set<int> cur(s.begin(), s.end());
    sum += static_cast<long>(cur.size());
    uni.insert(cur.begin(), cur.end());
    std::set<int> keep;
    for (int x : inter)
      if (cur.count(x)) keep.insert(x);
    inter = std::move(keep);
  }
  IntersectionBound out;
  out.bound = sum - static_cast<long>(sets.size() - 1) * static_cast<long>(uni.size());
  out.actual = static_cast<long>(inter.size());
  out.holds = out.actual >= out.bound;
  return out;
}

}  // namespace spexlab
