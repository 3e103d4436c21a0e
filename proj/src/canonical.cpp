#include "spexlab/canonical.hpp"

#include <algorithm>
#include <cstring>

namespace spexlab {

namespace {

// Ordered partition in nauty style: lab holds the vertices, ptn[i] == 1 means
// positions i and i+1 share a cell.
struct Part {
  std::array<int, kMaxVertices> lab;
  std::array<std::uint8_t, kMaxVertices> ptn;
};

struct Searcher {
  const Graph& g;
  int n;
  std::vector<std::uint8_t> best;       // adjacency bits of best leaf, row-major upper triangle
  std::array<int, kMaxVertices> best_lab;
  bool have_best = false;
  std::vector<std::array<int, kMaxVertices>> gens;  // automorphism generators
  std::array<int, kMaxVertices> path;
  int depth = 0;

  explicit Searcher(const Graph& gr) : g(gr), n(gr.order()) {}

  // Splits every cell by neighbor counts against all current cells until the
  // partition is equitable. Subcells are ordered by ascending count vector, so
  // the refined partition depends only on the isomorphism type.
  void refine(Part& p) const {
    std::array<VertexSet, kMaxVertices> cell_mask;
    std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> sig;
    bool changed = true;
    while (changed) {
      changed = false;
      int ncells = 0;
      for (int i = 0; i < n;) {
        VertexSet m;
        int j = i;
        for (;; ++j) {
          m.set(p.lab[j]);
          if (!p.ptn[j]) break;
        }
        cell_mask[ncells++] = m;
        i = j + 1;
      }
      if (ncells == n) return;
      for (int i = 0; i < n;) {
        int end = i;
        while (p.ptn[end]) ++end;
        int sz = end - i + 1;
        if (sz > 1) {
          for (int t = i; t <= end; ++t) {
            int v = p.lab[t];
            for (int c = 0; c < ncells; ++c)
              sig[v][c] = static_cast<std::uint8_t>((g.row(v) & cell_mask[c]).count());
          }
          std::stable_sort(p.lab.begin() + i, p.lab.begin() + end + 1, [&](int a, int b) {
            return std::memcmp(sig[a].data(), sig[b].data(), ncells) < 0;
          });
          for (int t = i; t < end; ++t)
            if (std::memcmp(sig[p.lab[t]].data(), sig[p.lab[t + 1]].data(), ncells) != 0) {
              if (p.ptn[t]) changed = true;
              p.ptn[t] = 0;
            }
        }
        i = end + 1;
      }
    }
  }

  std::vector<std::uint8_t> leaf_bits(const std::array<int, kMaxVertices>& lab) const {
    std::vector<std::uint8_t> bits((n * (n - 1) / 2 + 7) / 8, 0);
    int b = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++b)
        if (g.edge(lab[i], lab[j])) bits[b >> 3] |= std::uint8_t(1) << (b & 7);
    return bits;
  }

  // Union-find over vertices, built from generators fixing the current path.
  struct Orbits {
    std::array<int, kMaxVertices> parent;
    void init(int n) {
      for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
  };

  void path_orbits(Orbits& orb) const {
    orb.init(n);
    for (const auto& gen : gens) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = gen[path[i]] == path[i];
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) orb.merge(v, gen[v]);
    }
  }

  void search(const Part& p) {
    int target = -1;
    for (int i = 0; i < n; ++i)
      if (p.ptn[i]) {
        target = i;
        break;
      }
    if (target < 0) {
      std::vector<std::uint8_t> bits = leaf_bits(p.lab);
      if (!have_best || bits < best) {
        best = std::move(bits);
        best_lab = p.lab;
        have_best = true;
      } else if (bits == best && gens.size() < 128) {
        std::array<int, kMaxVertices> gen;
        for (int i = 0; i < n; ++i) gen[best_lab[i]] = p.lab[i];
        bool identity = true;
        for (int v = 0; v < n && identity; ++v) identity = gen[v] == v;
        if (!identity) gens.push_back(gen);
      }
      return;
    }
    int end = target;
    while (p.ptn[end]) ++end;
    std::vector<int> cell(p.lab.begin() + target, p.lab.begin() + end + 1);
    std::sort(cell.begin(), cell.end());
    std::vector<int> tried;
    Orbits orb;
    for (int v : cell) {
      path_orbits(orb);
      bool skip = false;
      for (int u : tried)
        if (orb.find(u) == orb.find(v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);
      Part child = p;
      child.lab[target] = v;
      child.ptn[target] = 0;
      int w = target + 1;
      for (int u : cell)
        if (u != v) child.lab[w++] = u;
      refine(child);
      path[depth++] = v;
      search(child);
      --depth;
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  int n = g.order();
  if (n <= 1) return g;
  Searcher s(g);
  Part root;
  for (int i = 0; i < n; ++i) {
    root.lab[i] = i;
    root.ptn[i] = i + 1 < n ? 1 : 0;
  }
  s.refine(root);
  s.search(root);
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.edge(s.best_lab[i], s.best_lab[j])) h.add_edge(i, j);
  return h;
}

std::string canonical_g6(const Graph& g) { return graph6_encode(canonical_form(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace spexlab
