#include "spexlab/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace spexlab {

namespace {

constexpr long kIterCap = 1000000;

// Perron pair of one connected component, vertices listed ascending.
SpectralResult component_perron(const Graph& g, const std::vector<int>& vs, double tol) {
  size_t k = vs.size();
  SpectralResult res;
  res.perron.assign(k, 0.0);
  if (k == 1) {
    res.perron[0] = 1.0;
    return res;
  }
  std::vector<std::vector<int>> adj(k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (i != j && g.edge(vs[i], vs[j])) adj[i].push_back(static_cast<int>(j));

  std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k))), y(k);
  for (long iter = 1; iter <= kIterCap; ++iter) {
    // y = (A+I)x; the +I keeps bipartite components from oscillating
    for (size_t i = 0; i < k; ++i) {
      double s = x[i];
      for (int j : adj[i]) s += x[j];
      y[i] = s;
    }
    double lam = 0.0;
    for (size_t i = 0; i < k; ++i) lam += x[i] * y[i];
    double rho = lam - 1.0;
    double resid = 0.0;
    for (size_t i = 0; i < k; ++i) resid = std::max(resid, std::fabs(y[i] - x[i] - rho * x[i]));
    if (resid <= tol) {
      res.rho = rho;
      res.residual = resid;
      res.iterations = iter;
      res.perron = x;
      return res;
    }
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (size_t i = 0; i < k; ++i) x[i] = y[i] / norm;
  }
  throw std::runtime_error("power iteration did not converge");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  if (g.order() < 1) throw std::invalid_argument("spectral radius needs n >= 1");
  SpectralResult best;
  std::vector<int> best_vs;
  bool have = false;
  for (const VertexSet& comp : components(g)) {
    std::vector<int> vs = comp.to_vector();
    SpectralResult r = component_perron(g, vs, tol);
    if (!have || r.rho > best.rho) {
      best = std::move(r);
      best_vs = std::move(vs);
      have = true;
    }
  }
  std::vector<double> full(g.order(), 0.0);
  for (size_t i = 0; i < best_vs.size(); ++i) full[best_vs[i]] = best.perron[i];
  best.perron = std::move(full);
  return best;
}

double rayleigh(const Graph& g, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != g.order())
    throw std::invalid_argument("vector length mismatch");
  double s = 0.0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = g.row(u).next(u + 1); v >= 0; v = g.row(u).next(v + 1)) s += x[u] * x[v];
  return 2.0 * s;
}

std::pair<Graph, RotationReport> rotate_edges(const Graph& g, int u, const VertexSet& dels,
                                              const VertexSet& adds) {
  if (u < 0 || u >= g.order()) throw std::invalid_argument("pivot out of range");
  if (!dels.subset_of(g.vertices()) || !adds.subset_of(g.vertices()))
    throw std::invalid_argument("vertex out of range");
  if (dels.empty() || adds.empty()) throw std::invalid_argument("empty rotation set");
  if (dels == adds) throw std::invalid_argument("deleted and added sets are identical");
  if (!dels.subset_of(g.row(u))) throw std::invalid_argument("deleted set not within N(u)");
  if (adds.intersects(g.row(u)) || adds.test(u))
    throw std::invalid_argument("added set meets N(u) + u");

  Graph h = g;
  for (int v = dels.min(); v >= 0; v = dels.next(v + 1)) h.remove_edge(u, v);
  for (int v = adds.min(); v >= 0; v = adds.next(v + 1)) h.add_edge(u, v);

  RotationReport rep;
  rep.connected = is_connected(g);
  SpectralResult sp = spectral_radius(g);
  for (int v = dels.min(); v >= 0; v = dels.next(v + 1)) rep.removed_sum += sp.perron[v];
  for (int v = adds.min(); v >= 0; v = adds.next(v + 1)) rep.added_sum += sp.perron[v];
  rep.sums_favor_added = rep.added_sum >= rep.removed_sum;
  rep.sets_differ = true;
  rep.increase_certified = rep.connected && rep.sums_favor_added;
  return {std::move(h), rep};
}

SwapCheck check_swap_preconditions(const Graph& g, const SwapSpec& spec, double tol) {
  SwapCheck chk;
  VertexSet all = g.vertices();
  VertexSet ab = spec.a | spec.b;
  VertexSet u = all - ab;
  if (!spec.a.subset_of(all) || !spec.b.subset_of(all) || spec.a.intersects(spec.b) ||
      !spec.u1.subset_of(u) || !spec.u2.subset_of(u)) {
    chk.clause = "sets";
    return chk;
  }
  if (!(spec.a.count() > spec.b.count() && spec.b.count() > 0)) {
    chk.clause = "|A|>|B|>0";
    return chk;
  }
  if (!is_connected(g)) {
    chk.clause = "connected";
    return chk;
  }
  for (int x = spec.a.min(); x >= 0; x = spec.a.next(x + 1)) {
    if ((g.row(x) & spec.a).count() != 0 || (g.row(x) & spec.b) != spec.b) {
      chk.clause = "(i)";
      return chk;
    }
  }
  for (int x = spec.b.min(); x >= 0; x = spec.b.next(x + 1))
    if ((g.row(x) & spec.b).count() != 0) {
      chk.clause = "(i)";
      return chk;
    }
  for (int x = spec.a.min(); x >= 0; x = spec.a.next(x + 1))
    if ((g.row(x) & u) != spec.u1) {
      chk.clause = "(ii)";
      return chk;
    }
  for (int x = spec.b.min(); x >= 0; x = spec.b.next(x + 1))
    if ((g.row(x) & u) != spec.u2) {
      chk.clause = "(ii)";
      return chk;
    }
  SpectralResult sp = spectral_radius(g, tol);
  for (int x = spec.u1.min(); x >= 0; x = spec.u1.next(x + 1)) chk.u1_sum += sp.perron[x];
  for (int x = spec.u2.min(); x >= 0; x = spec.u2.next(x + 1)) chk.u2_sum += sp.perron[x];
  if (!(chk.u1_sum < chk.u2_sum)) {
    chk.clause = "(iii)";
    return chk;
  }
  chk.pass = true;
  return chk;
}

Graph neighborhood_swap(const Graph& g, const SwapSpec& spec) {
  SwapCheck chk = check_swap_preconditions(g, spec);
  if (!chk.pass) throw std::invalid_argument("swap precondition failed: " + chk.clause);
  Graph h = g;
  for (int x = spec.a.min(); x >= 0; x = spec.a.next(x + 1)) {
    for (int v = spec.u1.min(); v >= 0; v = spec.u1.next(v + 1)) h.remove_edge(x, v);
    for (int v = spec.u2.min(); v >= 0; v = spec.u2.next(v + 1)) h.add_edge(x, v);
  }
  for (int x = spec.b.min(); x >= 0; x = spec.b.next(x + 1)) {
    for (int v = spec.u2.min(); v >= 0; v = spec.u2.next(v + 1)) h.remove_edge(x, v);
    for (int v = spec.u1.min(); v >= 0; v = spec.u1.next(v + 1)) h.add_edge(x, v);
  }
  return h;
}

double turan_rho_floor(int n, int r) {
  if (r < 1 || n < r) throw std::invalid_argument("needs n >= r >= 1");
  double nn = n, rr = r;
  return (rr - 1.0) * nn / rr - rr / (4.0 * nn);
}

}  // namespace spexlab
