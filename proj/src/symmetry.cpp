#include "spexlab/symmetry.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "spexlab/errors.hpp"

namespace spexlab {

namespace {

VertexSet mask_of(const std::vector<int>& vs) {
  VertexSet m;
  for (int v : vs) m.set(v);
  return m;
}

// Bijection b0 -> bj preserving induced adjacency and rows restricted to
// `outside`; b0 listed ascending.
std::optional<std::vector<int>> attachment_iso(const Graph& g, const std::vector<int>& b0,
                                               const std::vector<int>& bj, VertexSet outside) {
  size_t s = b0.size();
  if (bj.size() != s) return std::nullopt;
  VertexSet m0 = mask_of(b0), mj = mask_of(bj);
  std::vector<std::vector<int>> cand(s);
  for (size_t i = 0; i < s; ++i) {
    VertexSet need = g.row(b0[i]) & outside;
    int ideg = (g.row(b0[i]) & m0).count();
    for (int w : bj)
      if ((g.row(w) & outside) == need && (g.row(w) & mj).count() == ideg)
        cand[i].push_back(w);
    if (cand[i].empty()) return std::nullopt;
  }
  std::vector<int> out(s, -1);
  VertexSet used;
  auto rec = [&](auto&& self, size_t pos) -> bool {
    if (pos == s) return true;
    for (int w : cand[pos]) {
      if (used.test(w)) continue;
      bool ok = true;
      for (size_t p = 0; p < pos && ok; ++p)
        ok = g.edge(b0[pos], b0[p]) == g.edge(w, out[p]);
      if (!ok) continue;
      out[pos] = w;
      used.set(w);
      if (self(self, pos + 1)) return true;
      used.reset(w);
      out[pos] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return out;
}

}  // namespace

SymmetryCheck are_symmetric_subgraphs(const Graph& g, const SymmetricTuple& tuple) {
  SymmetryCheck chk;
  size_t tau = tuple.blocks.size();
  VertexSet all = g.vertices();
  VertexSet uni;
  if (tau == 0 || tuple.maps.size() != tau - 1) {
    chk.clause = "blocks";
    return chk;
  }
  for (const VertexSet& b : tuple.blocks) {
    if (b.empty() || !b.subset_of(all) || b.intersects(uni)) {
      chk.clause = "blocks";
      return chk;
    }
    uni = uni | b;
  }
  std::vector<int> b0 = tuple.blocks[0].to_vector();
  for (size_t j = 1; j < tau; ++j) {
    const std::vector<int>& mp = tuple.maps[j - 1];
    if (mp.size() != b0.size() || tuple.blocks[j].count() != static_cast<int>(b0.size())) {
      chk.clause = "blocks";
      return chk;
    }
    VertexSet seen;
    for (int w : mp) {
      if (w < 0 || w >= g.order() || !tuple.blocks[j].test(w) || seen.test(w)) {
        chk.clause = "blocks";
        return chk;
      }
      seen.set(w);
    }
  }
  for (const VertexSet& b : tuple.blocks)
    if (!is_connected(induced_subgraph(g, b))) {
      chk.clause = "connected";
      return chk;
    }
  for (size_t j = 1; j < tau; ++j) {
    const std::vector<int>& mp = tuple.maps[j - 1];
    for (size_t i = 0; i < b0.size(); ++i)
      for (size_t i2 = i + 1; i2 < b0.size(); ++i2)
        if (g.edge(b0[i], b0[i2]) != g.edge(mp[i], mp[i2])) {
          chk.clause = "isomorphism";
          return chk;
        }
  }
  for (size_t i = 0; i < tau; ++i)
    for (size_t j = i + 1; j < tau; ++j)
      for (int v = tuple.blocks[i].min(); v >= 0; v = tuple.blocks[i].next(v + 1))
        if (g.row(v).intersects(tuple.blocks[j])) {
          chk.clause = "block-adjacency";
          return chk;
        }
  VertexSet outside = all - uni;
  for (size_t j = 1; j < tau; ++j) {
    const std::vector<int>& mp = tuple.maps[j - 1];
    for (size_t i = 0; i < b0.size(); ++i)
      if ((g.row(b0[i]) & outside) != (g.row(mp[i]) & outside)) {
        chk.clause = "attachment";
        return chk;
      }
  }
  chk.ok = true;
  return chk;
}

std::vector<VertexSet> symmetric_vertex_classes(const Graph& g) {
  std::vector<VertexSet> classes;
  std::map<VertexSet, size_t> row_to_class;
  for (int v = 0; v < g.order(); ++v) {
    auto [it, fresh] = row_to_class.emplace(g.row(v), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].set(v);
  }
  return classes;
}

namespace {

void combinations(int n, int k, const std::function<bool(const std::vector<int>&)>& visit);

// all k-subsets of {0..n-1} in lexicographic order; visit returns true to stop
void combinations(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int start, int depth) -> bool {
    if (depth == k) return visit(pick);
    for (int v = start; v <= n - (k - depth); ++v) {
      pick[depth] = v;
      if (self(self, v + 1, depth + 1)) return true;
    }
    return false;
  };
  if (k == 0) {
    visit({});
    return;
  }
  rec(rec, 0, 0);
}

}  // namespace

std::optional<SymmetricTuple> find_symmetric_subgraphs(const Graph& g, int tau, int max_size) {
  if (tau < 1 || max_size < 1) throw std::invalid_argument("need tau >= 1, max_size >= 1");
  if (g.order() > 40 || max_size > 4 || tau > 6)
    throw budget_error("symmetric subgraph search limited to n <= 40, size <= 4, tau <= 6");
  int n = g.order();
  for (int size = 1; size <= max_size; ++size) {
    if (static_cast<long>(size) * tau > n) break;
    std::vector<std::vector<int>> cands;
    combinations(n, size, [&](const std::vector<int>& vs) {
      if (is_connected(induced_subgraph(g, mask_of(vs)))) cands.push_back(vs);
      return false;
    });
    std::vector<size_t> chosen;
    std::optional<SymmetricTuple> found;
    auto rec = [&](auto&& self, size_t start, VertexSet uni) -> bool {
      if (static_cast<int>(chosen.size()) == tau) {
        SymmetricTuple t;
        for (size_t idx : chosen) t.blocks.push_back(mask_of(cands[idx]));
        VertexSet outside = g.vertices() - uni;
        const std::vector<int>& b0 = cands[chosen[0]];
        for (size_t j = 1; j < chosen.size(); ++j) {
          auto mp = attachment_iso(g, b0, cands[chosen[j]], outside);
          if (!mp) return false;
          t.maps.push_back(*mp);
        }
        if (!are_symmetric_subgraphs(g, t).ok) return false;
        found = std::move(t);
        return true;
      }
      for (size_t idx = start; idx < cands.size(); ++idx) {
        VertexSet m = mask_of(cands[idx]);
        if (m.intersects(uni)) continue;
        bool touches = false;
        for (int v : cands[idx])
          if (g.row(v).intersects(uni)) {
            touches = true;
            break;
          }
        if (touches) continue;
        chosen.push_back(idx);
        if (self(self, idx + 1, uni | m)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (rec(rec, 0, VertexSet{})) return found;
  }
  return std::nullopt;
}

SymmetricExtension extend_by_symmetric_copy(const Graph& g, const SymmetricTuple& tuple) {
  SymmetryCheck chk = are_symmetric_subgraphs(g, tuple);
  if (!chk.ok) throw std::invalid_argument("tuple not symmetric: " + chk.clause);
  std::vector<int> b0 = tuple.blocks[0].to_vector();
  int n = g.order();
  int s = static_cast<int>(b0.size());
  if (n + s > kMaxVertices) throw std::invalid_argument("extension exceeds order cap");
  VertexSet uni;
  for (const VertexSet& b : tuple.blocks) uni = uni | b;
  VertexSet outside = g.vertices() - uni;

  Graph h(n + s);
  for (int u = 0; u < n; ++u)
    for (int v = g.row(u).next(u + 1); v >= 0; v = g.row(u).next(v + 1)) h.add_edge(u, v);
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j)
      if (g.edge(b0[i], b0[j])) h.add_edge(n + i, n + j);
    VertexSet att = g.row(b0[i]) & outside;
    for (int v = att.min(); v >= 0; v = att.next(v + 1)) h.add_edge(n + i, v);
  }

  SymmetricExtension ext{std::move(h), tuple};
  VertexSet fresh;
  std::vector<int> fresh_map(s);
  for (int i = 0; i < s; ++i) {
    fresh.set(n + i);
    fresh_map[i] = n + i;
  }
  ext.tuple.blocks.push_back(fresh);
  ext.tuple.maps.push_back(std::move(fresh_map));
  if (!are_symmetric_subgraphs(ext.graph, ext.tuple).ok)
    throw std::logic_error("extension failed to stay symmetric");
  return ext;
}

namespace {

std::vector<VertexSet> complement_components(const Graph& g, VertexSet active) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int s = active.min(); s >= 0; s = active.next(s + 1)) {
    if (seen.test(s)) continue;
    VertexSet comp;
    std::vector<int> queue{s};
    comp.set(s);
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      VertexSet nb = (active - g.row(u)) - comp;
      nb.reset(u);
      for (int v = nb.min(); v >= 0; v = nb.next(v + 1)) {
        comp.set(v);
        queue.push_back(v);
      }
    }
    seen = seen | comp;
    out.push_back(comp);
  }
  return out;
}

// Components of G[part], as a symmetric tuple in G when possible.
bool part_blocks_symmetric(const Graph& g, VertexSet part, std::vector<VertexSet>& blocks_out) {
  std::vector<VertexSet> blocks;
  for (const VertexSet& c : components(induced_subgraph(g, part))) {
    VertexSet lifted;
    std::vector<int> pv = part.to_vector();
    for (int i = c.min(); i >= 0; i = c.next(i + 1)) lifted.set(pv[i]);
    blocks.push_back(lifted);
  }
  if (blocks.size() == 1) {
    blocks_out = std::move(blocks);
    return true;
  }
  VertexSet outside = g.vertices() - part;
  std::vector<int> b0 = blocks[0].to_vector();
  SymmetricTuple t;
  t.blocks = blocks;
  for (size_t j = 1; j < blocks.size(); ++j) {
    auto mp = attachment_iso(g, b0, blocks[j].to_vector(), outside);
    if (!mp) return false;
    t.maps.push_back(*mp);
  }
  if (!are_symmetric_subgraphs(g, t).ok) return false;
  blocks_out = std::move(blocks);
  return true;
}

}  // namespace

std::optional<PartitionWitness> check_d_membership(const Graph& g, int r, int c) {
  if (r < 1 || c < 0) throw std::invalid_argument("need r >= 1, c >= 0");
  if (g.order() > 12 || c > 3)
    throw budget_error("membership check limited to n <= 12, c <= 3");
  int n = g.order();
  std::optional<PartitionWitness> result;
  for (int rsize = 0; rsize <= std::min(c, n) && !result; ++rsize) {
    combinations(n, rsize, [&](const std::vector<int>& rset) {
      VertexSet removed = mask_of(rset);
      VertexSet active = g.vertices() - removed;
      if (active.empty()) return false;
      std::vector<VertexSet> comps = complement_components(g, active);
      int k = static_cast<int>(comps.size());
      if (k < r) return false;
      std::vector<int> assign(k, -1);
      auto rec = [&](auto&& self, int i, int used) -> bool {
        if (k - i < r - used) return false;
        if (i == k) {
          if (used != r) return false;
          std::vector<VertexSet> parts(r);
          for (int j = 0; j < k; ++j) parts[assign[j]] = parts[assign[j]] | comps[j];
          for (const VertexSet& p : parts)
            if (std::labs(static_cast<long>(r) * p.count() - n) > static_cast<long>(r) * c)
              return false;
          std::vector<std::vector<VertexSet>> all_blocks(r);
          for (int j = 0; j < r; ++j)
            if (!part_blocks_symmetric(g, parts[j], all_blocks[j])) return false;
          result = PartitionWitness{removed, std::move(parts), std::move(all_blocks)};
          return true;
        }
        int lim = std::min(used + 1, r);
        for (int grp = 0; grp < lim; ++grp) {
          assign[i] = grp;
          if (self(self, i + 1, std::max(used, grp + 1))) return true;
        }
        assign[i] = -1;
        return false;
      };
      return rec(rec, 0, 0);
    });
  }
  return result;
}

}  // namespace spexlab
