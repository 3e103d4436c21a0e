#include "spexlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace spexlab {

int VertexSet::count() const {
  return std::popcount(w[0]) + std::popcount(w[1]);
}

int VertexSet::min() const {
  if (w[0]) return std::countr_zero(w[0]);
  if (w[1]) return 64 + std::countr_zero(w[1]);
  return -1;
}

int VertexSet::next(int v) const {
  if (v >= 128) return -1;
  if (v < 64) {
    std::uint64_t m = w[0] & (~std::uint64_t(0) << v);
    if (m) return std::countr_zero(m);
    v = 64;
  }
  std::uint64_t m = w[1] & (~std::uint64_t(0) << (v - 64));
  if (m) return 64 + std::countr_zero(m);
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v = min(); v >= 0; v = next(v + 1)) out.push_back(v);
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
  rows_.resize(n);
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("bad edge endpoints");
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("bad edge endpoints");
  rows_[u].reset(v);
  rows_[v].reset(u);
}

long Graph::edge_count() const {
  long d = 0;
  for (int v = 0; v < n_; ++v) d += degree(v);
  return d / 2;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
  long n = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative part size");
    n += p;
  }
  Graph g(static_cast<int>(n));
  int base_u = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    int base_v = base_u + parts[i];
    for (size_t j = i + 1; j < parts.size(); ++j) {
      for (int u = 0; u < parts[i]; ++u)
        for (int v = 0; v < parts[j]; ++v) g.add_edge(base_u + u, base_v + v);
      base_v += parts[j];
    }
    base_u += parts[i];
  }
  return g;
}

Graph turan_graph(int n, int r) {
  if (n < 0) throw std::invalid_argument("negative order");
  if (r < 0 || (r == 0 && n > 0)) throw std::invalid_argument("turan graph needs r >= 1");
  if (n == 0) return Graph(0);
  std::vector<int> parts(r);
  int q = n / r, rem = n % r;
  for (int i = 0; i < r; ++i) parts[i] = q + (i < rem ? 1 : 0);
  return complete_multipartite(parts);
}

Graph complement(const Graph& g) {
  int n = g.order();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.edge(u, v)) h.add_edge(u, v);
  return h;
}

Graph disjoint_union(const std::vector<Graph>& gs) {
  if (gs.empty()) throw std::invalid_argument("union of empty list");
  long n = 0;
  for (const Graph& g : gs) n += g.order();
  Graph h(static_cast<int>(n));
  int base = 0;
  for (const Graph& g : gs) {
    for (int u = 0; u < g.order(); ++u)
      for (int v = g.row(u).next(u + 1); v >= 0; v = g.row(u).next(v + 1))
        h.add_edge(base + u, base + v);
    base += g.order();
  }
  return h;
}

Graph join(const std::vector<Graph>& gs) {
  Graph h = disjoint_union(gs);
  int base_u = 0;
  for (size_t i = 0; i < gs.size(); ++i) {
    int base_v = base_u + gs[i].order();
    for (size_t j = i + 1; j < gs.size(); ++j) {
      for (int u = 0; u < gs[i].order(); ++u)
        for (int v = 0; v < gs[j].order(); ++v) h.add_edge(base_u + u, base_v + v);
      base_v += gs[j].order();
    }
    base_u += gs[i].order();
  }
  return h;
}

namespace {

// BFS distances from s; -1 marks unreachable.
std::vector<int> bfs(const Graph& g, int s) {
  std::vector<int> dist(g.order(), -1);
  std::vector<int> queue{s};
  dist[s] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v = g.row(u).min(); v >= 0; v = g.row(u).next(v + 1))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

Graph graph_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("graph power needs k >= 1");
  int n = g.order();
  Graph h(n);
  for (int u = 0; u < n; ++u) {
    std::vector<int> dist = bfs(g, u);
    for (int v = u + 1; v < n; ++v)
      if (dist[v] >= 1 && dist[v] <= k) h.add_edge(u, v);
  }
  return h;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw std::invalid_argument("vertex out of range");
  int d = bfs(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> vs = keep.to_vector();
  if (!vs.empty() && vs.back() >= g.order()) throw std::invalid_argument("vertex out of range");
  Graph h(static_cast<int>(vs.size()));
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.edge(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  VertexSet keep = g.vertices();
  keep.reset(v);
  return induced_subgraph(g, keep);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<int> dist = bfs(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int s = 0; s < g.order(); ++s) {
    if (seen.test(s)) continue;
    std::vector<int> dist = bfs(g, s);
    VertexSet comp;
    for (int v = 0; v < g.order(); ++v)
      if (dist[v] >= 0) comp.set(v);
    seen = seen | comp;
    out.push_back(comp);
  }
  return out;
}

GraphStats basic_stats(const Graph& g) {
  GraphStats st;
  st.edges = g.edge_count();
  st.connected = is_connected(g);
  if (g.order() == 0) return st;
  st.min_degree = g.degree(0);
  st.max_degree = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    st.min_degree = std::min(st.min_degree, g.degree(v));
    st.max_degree = std::max(st.max_degree, g.degree(v));
  }
  return st;
}

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(const std::string& s) {
  size_t pos = 0;
  auto val = [&](size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  long n;
  if (s[0] == 126) {
    if (s.size() >= 2 && s[1] == 126) throw std::invalid_argument("graph6: order too large");
    if (s.size() < 4) throw std::invalid_argument("graph6: truncated header");
    n = (long(val(1)) << 12) | (val(2) << 6) | val(3);
    pos = 4;
  } else {
    n = val(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw std::invalid_argument("graph6: order exceeds 128");
  long nbits = n * (n - 1) / 2;
  long nbytes = (nbits + 5) / 6;
  if (static_cast<long>(s.size()) - static_cast<long>(pos) != nbytes)
    throw std::invalid_argument("graph6: length mismatch");
  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((val(pos + bit / 6) >> (5 - bit % 6)) & 1) g.add_edge(u, v);
  // trailing pad bits must be zero
  for (long b = nbits; b < nbytes * 6; ++b)
    if ((val(pos + b / 6) >> (5 - b % 6)) & 1)
      throw std::invalid_argument("graph6: nonzero padding");
  return g;
}

}  // namespace spexlab
