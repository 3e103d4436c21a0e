#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spexlab {

constexpr int kMaxVertices = 128;

// Subset of {0,...,127} as two machine words.
struct VertexSet {
  std::array<std::uint64_t, 2> w{0, 0};

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.set(v);
    return s;
  }
  static VertexSet range(int n) {  // {0,...,n-1}
    VertexSet s;
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
  }

  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { w[v >> 6] |= std::uint64_t(1) << (v & 63); }
  void reset(int v) { w[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
  int count() const;
  bool empty() const { return w[0] == 0 && w[1] == 0; }
  int min() const;  // least element, -1 if empty
  // Least element >= v, -1 if none.
  int next(int v) const;

  VertexSet operator&(const VertexSet& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  VertexSet operator|(const VertexSet& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  VertexSet operator-(const VertexSet& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }
  bool operator==(const VertexSet& o) const { return w == o.w; }
  bool operator!=(const VertexSet& o) const { return w != o.w; }
  bool operator<(const VertexSet& o) const { return w[1] != o.w[1] ? w[1] < o.w[1] : w[0] < o.w[0]; }
  bool subset_of(const VertexSet& o) const { return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0; }
  bool intersects(const VertexSet& o) const { return (w[0] & o.w[0]) || (w[1] & o.w[1]); }

  std::vector<int> to_vector() const;
};

// Simple undirected graph on vertices 0..n-1, adjacency kept as bit rows.
// Operations on graphs are pure; nothing mutates a built graph except the
// add/remove helpers used while assembling one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  bool edge(int u, int v) const { return rows_[u].test(v); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  const VertexSet& row(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }
  long edge_count() const;
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> rows_;
};

struct GraphStats {
  long edges = 0;
  int min_degree = 0;  // 0 on the empty graph
  int max_degree = 0;
  bool connected = true;  // empty and 1-vertex graphs count as connected
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// Zero part sizes are allowed and contribute nothing.
Graph complete_multipartite(const std::vector<int>& parts);
// Balanced complete r-partite graph; larger parts come first. turan_graph(0,0)
// is the empty graph, any other r=0 is an error.
Graph turan_graph(int n, int r);

Graph complement(const Graph& g);
Graph disjoint_union(const std::vector<Graph>& gs);  // concatenates in order
Graph join(const std::vector<Graph>& gs);
// Connect vertices at BFS distance <= k, k >= 1.
Graph graph_power(const Graph& g, int k);
std::optional<int> distance(const Graph& g, int u, int v);

Graph induced_subgraph(const Graph& g, const VertexSet& keep);  // keeps vertex order
Graph delete_vertex(const Graph& g, int v);
bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
GraphStats basic_stats(const Graph& g);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

}  // namespace spexlab
