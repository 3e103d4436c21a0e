#include "spexlab/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "spexlab/spectral.hpp"
#include "spexlab/subgraph.hpp"
#include "spexlab/symmetry.hpp"

namespace spexlab {

Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin(p)) g.add_edge(u, v);
  return g;
}

Graph random_connected_graph(Rng& rng, int n, double p) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, rng.uniform(0, v - 1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.edge(u, v) && rng.coin(p)) g.add_edge(u, v);
  return g;
}

namespace {

VertexSet random_subset(Rng& rng, const VertexSet& pool, double p) {
  VertexSet out;
  for (int v = pool.min(); v >= 0; v = pool.next(v + 1))
    if (rng.coin(p)) out.set(v);
  return out;
}

int random_element(Rng& rng, const VertexSet& pool) {
  std::vector<int> vs = pool.to_vector();
  return vs[rng.uniform(0, static_cast<int>(vs.size()) - 1)];
}

// margin = rho(after) - rho(before); near-ties recomputed at a tighter
// tolerance so a sloppy eigensolve cannot fake a violation
double increase_margin(const Graph& before, const Graph& after) {
  double m = spectral_radius(after).rho - spectral_radius(before).rho;
  if (m < 1e-9) m = spectral_radius(after, 1e-13).rho - spectral_radius(before, 1e-13).rho;
  return m;
}

struct MarginTracker {
  double best = std::numeric_limits<double>::infinity();
  std::string worst;
  void feed(double margin, const std::string& desc) {
    if (margin < best) {
      best = margin;
      worst = desc;
    }
  }
};

}  // namespace

TrialSummary subgraph_monotonicity_trials(long trials, std::uint64_t seed, int n_max) {
  Rng rng(seed);
  TrialSummary sum;
  sum.name = "subgraph-monotonicity";
  sum.seed = seed;
  MarginTracker track;
  for (long t = 0; t < trials; ++t) {
    ++sum.attempts;
    int n = rng.uniform(2, n_max);
    Graph g = random_connected_graph(rng, n, rng.real01() * 0.6 + 0.2);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.edge(u, v)) edges.emplace_back(u, v);
    Graph h = g;
    int removed = 0;
    for (auto [u, v] : edges)
      if (rng.coin(0.3)) {
        h.remove_edge(u, v);
        ++removed;
      }
    if (removed == 0) {
      auto [u, v] = edges[rng.uniform(0, static_cast<int>(edges.size()) - 1)];
      h.remove_edge(u, v);
      ++removed;
    }
    double margin = spectral_radius(g).rho - spectral_radius(h).rho;
    if (margin < 1e-9)
      margin = spectral_radius(g, 1e-13).rho - spectral_radius(h, 1e-13).rho;
    ++sum.trials;
    if (margin <= 1e-9) ++sum.violations;
    std::ostringstream os;
    os << "host " << graph6_encode(g) << " minus " << removed << " edges";
    track.feed(margin, os.str());
  }
  sum.min_margin = track.best;
  sum.worst = track.worst;
  return sum;
}

TrialSummary rotation_trials(long trials, std::uint64_t seed, int n_max) {
  Rng rng(seed);
  TrialSummary sum;
  sum.name = "edge-rotation";
  sum.seed = seed;
  MarginTracker track;
  while (sum.trials < trials) {
    ++sum.attempts;
    int n = rng.uniform(4, n_max);
    Graph g = random_connected_graph(rng, n, rng.real01() * 0.5 + 0.25);
    int u = rng.uniform(0, n - 1);
    VertexSet nbrs = g.row(u);
    VertexSet others = g.vertices() - nbrs;
    others.reset(u);
    if (others.empty()) continue;
    VertexSet dels = random_subset(rng, nbrs, 0.5);
    if (dels.empty()) dels.set(random_element(rng, nbrs));
    VertexSet adds = random_subset(rng, others, 0.5);
    if (adds.empty()) adds.set(random_element(rng, others));
    auto [h, rep] = rotate_edges(g, u, dels, adds);
    if (!rep.increase_certified) continue;
    double margin = increase_margin(g, h);
    ++sum.trials;
    if (margin <= 1e-12) ++sum.violations;
    std::ostringstream os;
    os << "host " << graph6_encode(g) << " pivot " << u << " -" << dels.count() << " +"
       << adds.count();
    track.feed(margin, os.str());
  }
  sum.min_margin = track.best;
  sum.worst = track.worst;
  return sum;
}

TrialSummary swap_trials(long trials, std::uint64_t seed) {
  Rng rng(seed);
  TrialSummary sum;
  sum.name = "neighborhood-swap";
  sum.seed = seed;
  MarginTracker track;
  while (sum.trials < trials) {
    ++sum.attempts;
    int asz = rng.uniform(2, 5);
    int bsz = rng.uniform(1, std::min(4, asz - 1));
    int usz = rng.uniform(1, 5);
    int n = asz + bsz + usz;
    SwapSpec spec;
    for (int v = 0; v < asz; ++v) spec.a.set(v);
    for (int v = asz; v < asz + bsz; ++v) spec.b.set(v);
    VertexSet upool;
    for (int v = asz + bsz; v < n; ++v) upool.set(v);
    Graph g(n);
    for (int va = 0; va < asz; ++va)
      for (int vb = asz; vb < asz + bsz; ++vb) g.add_edge(va, vb);
    for (int x = asz + bsz; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (rng.coin(0.5)) g.add_edge(x, y);
    spec.u1 = random_subset(rng, upool, 0.5);
    spec.u2 = random_subset(rng, upool, 0.5);
    for (int v = 0; v < asz; ++v)
      for (int x = spec.u1.min(); x >= 0; x = spec.u1.next(x + 1)) g.add_edge(v, x);
    for (int v = asz; v < asz + bsz; ++v)
      for (int x = spec.u2.min(); x >= 0; x = spec.u2.next(x + 1)) g.add_edge(v, x);
    if (!is_connected(g)) continue;
    SwapCheck chk = check_swap_preconditions(g, spec);
    if (!chk.pass) continue;
    Graph h = neighborhood_swap(g, spec);
    double margin = increase_margin(g, h);
    ++sum.trials;
    if (margin <= 1e-12) ++sum.violations;
    std::ostringstream os;
    os << "host " << graph6_encode(g) << " |A|=" << asz << " |B|=" << bsz << " |U|=" << usz;
    track.feed(margin, os.str());
  }
  sum.min_margin = track.best;
  sum.worst = track.worst;
  return sum;
}

TrialSummary intersection_trials(long trials, std::uint64_t seed) {
  Rng rng(seed);
  TrialSummary sum;
  sum.name = "intersection-bound";
  sum.seed = seed;
  for (long t = 0; t < trials; ++t) {
    ++sum.attempts;
    int l = rng.uniform(2, 6);
    int universe = rng.uniform(1, 20);
    std::vector<std::vector<int>> sets(l);
    for (auto& s : sets) {
      double dens = rng.real01() * 0.7 + 0.2;
      for (int e = 0; e < universe; ++e)
        if (rng.coin(dens)) s.push_back(e);
    }
    IntersectionBound ib = intersection_lower_bound(sets);
    ++sum.trials;
    if (!ib.holds) {
      ++sum.violations;
      std::ostringstream os;
      os << "l=" << l << " universe=" << universe << " bound=" << ib.bound
         << " actual=" << ib.actual;
      sum.worst = os.str();
    }
  }
  return sum;
}

TrialSummary symmetric_extension_trials(long trials, std::uint64_t seed) {
  Rng rng(seed);
  TrialSummary sum;
  sum.name = "symmetric-extension";
  sum.seed = seed;
  while (sum.trials < trials) {
    ++sum.attempts;
    if (sum.attempts > 500 * (trials + 1))
      throw std::runtime_error("symmetric extension generator stalled");
    int base_n = rng.uniform(3, 6);
    int tau = rng.uniform(4, 6);
    int qsize = rng.uniform(1, 3);
    Graph base = random_graph(rng, base_n, 0.4);
    Graph block = random_connected_graph(rng, qsize, 0.5);
    std::vector<VertexSet> wiring(qsize);
    for (int i = 0; i < qsize; ++i)
      wiring[i] = random_subset(rng, VertexSet::range(base_n), 0.4);

    int n = base_n + tau * qsize;
    Graph g(n);
    for (int u = 0; u < base_n; ++u)
      for (int v = u + 1; v < base_n; ++v)
        if (base.edge(u, v)) g.add_edge(u, v);
    SymmetricTuple tuple;
    for (int j = 0; j < tau; ++j) {
      int off = base_n + j * qsize;
      VertexSet blk;
      for (int i = 0; i < qsize; ++i) {
        blk.set(off + i);
        for (int i2 = i + 1; i2 < qsize; ++i2)
          if (block.edge(i, i2)) g.add_edge(off + i, off + i2);
        for (int w = wiring[i].min(); w >= 0; w = wiring[i].next(w + 1))
          g.add_edge(off + i, w);
      }
      tuple.blocks.push_back(blk);
      if (j > 0) {
        std::vector<int> map(qsize);
        for (int i = 0; i < qsize; ++i) map[i] = off + i;
        tuple.maps.push_back(map);
      }
    }
    if (!are_symmetric_subgraphs(g, tuple).ok)
      throw std::logic_error("generator produced a non-symmetric tuple");

    bool found = false;
    ForbiddenFamily fam;
    for (int tries = 0; tries < 8 && !found; ++tries) {
      std::vector<Graph> members;
      int count = rng.coin(0.3) ? 2 : 1;
      for (int c = 0; c < count; ++c) {
        Graph m = random_graph(rng, rng.uniform(3, 4), rng.real01() * 0.4 + 0.5);
        if (m.edge_count() < 2) m = complete_graph(3);
        members.push_back(m);
      }
      ForbiddenFamily cand = make_family(std::move(members));
      if (cand.t <= tau && is_family_free(g, cand)) {
        fam = std::move(cand);
        found = true;
      }
    }
    if (!found) continue;

    SymmetricExtension ext = extend_by_symmetric_copy(g, tuple);
    ++sum.trials;
    if (!is_family_free(ext.graph, fam)) {
      ++sum.violations;
      std::ostringstream os;
      os << "host " << graph6_encode(g) << " tau=" << tau << " block=" << qsize;
      sum.worst = os.str();
    }
  }
  return sum;
}

}  // namespace spexlab
