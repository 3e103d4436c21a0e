#include "spexlab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spexlab/canonical.hpp"
#include "spexlab/errors.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/symmetry.hpp"

namespace spexlab {

namespace {

// value per class, -1 for classes that contain a family member; deterministic
// at any thread count since slot i depends only on classes[i]
std::vector<double> sweep_values(const std::vector<std::string>& classes,
                                 const ForbiddenFamily& fam, bool spectral, int jobs) {
  std::vector<double> vals(classes.size(), -1.0);
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      Graph g = graph6_decode(classes[i]);
      if (!is_family_free(g, fam)) continue;
      vals[i] = spectral ? spectral_radius(g).rho : static_cast<double>(g.edge_count());
    }
  };
  if (jobs <= 1 || classes.size() < 256) {
    work(0, classes.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (classes.size() + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      size_t lo = t * chunk, hi = std::min(classes.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return vals;
}

SearchReport run_search(int n, const ForbiddenFamily& fam, bool spectral, double tol,
                        const SearchOptions& opts) {
  SearchReport rep;
  rep.n = n;
  rep.mode = spectral ? "spectral" : "edges";
  for (const Graph& f : fam.members) rep.family_g6.push_back(canonical_g6(f));

  EnumOptions eo;
  eo.cache_dir = opts.cache_dir;
  eo.jobs = opts.jobs;
  eo.allow_order_10 = opts.allow_order_10;
  EnumResult er = enumerate_graphs(n, eo);
  rep.disk_cache_hit = er.disk_cache_hit;
  rep.classes_total = static_cast<long>(er.g6->size());

  int jobs = opts.jobs > 0 ? opts.jobs : 1;
  std::vector<double> vals = sweep_values(*er.g6, fam, spectral, jobs);

  double best = -1.0;
  for (double v : vals) {
    if (v >= 0.0) ++rep.classes_free;
    best = std::max(best, v);
  }
  if (rep.classes_free == 0) return rep;

  double cut = spectral ? tol : 0.5;
  double runner = -1.0;
  std::vector<std::pair<std::string, double>> hits;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] < 0.0) continue;
    if (vals[i] >= best - cut)
      hits.emplace_back((*er.g6)[i], vals[i]);
    else
      runner = std::max(runner, vals[i]);
  }
  std::sort(hits.begin(), hits.end());
  for (auto& [g6, v] : hits) {
    rep.witnesses.push_back(g6);
    rep.witness_gaps.push_back(best - v);
  }
  rep.runner_up_gap = runner < 0.0 ? best + 1.0 : best - runner;
  if (spectral) {
    rep.rho_value = best;
    rep.unique = rep.witnesses.size() == 1 && rep.runner_up_gap > 1e-6;
  } else {
    rep.edge_value = std::lround(best);
    rep.unique = rep.witnesses.size() == 1;
  }
  // witnesses re-verify on emit
  for (const std::string& w : rep.witnesses) {
    Graph g = graph6_decode(w);
    if (!is_family_free(g, fam)) throw std::logic_error("witness fails family check");
    double v = spectral ? spectral_radius(g).rho : static_cast<double>(g.edge_count());
    if (std::fabs(v - best) > cut) throw std::logic_error("witness fails value check");
  }
  return rep;
}

}  // namespace

SearchReport ex_search(int n, const ForbiddenFamily& fam, const SearchOptions& opts) {
  return run_search(n, fam, false, 0.0, opts);
}

SearchReport spex_search(int n, const ForbiddenFamily& fam, double tol, const SearchOptions& opts) {
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  return run_search(n, fam, true, tol, opts);
}

Graph apex_turan(int s, int n, int r) {
  if (s < 1 || n < s || r < 2) throw std::invalid_argument("need n >= s >= 1, r >= 2");
  return join({complete_graph(s - 1), turan_graph(n - s + 1, r)});
}

ForbiddenFamily matching_turan_family(int s, int m, int r) {
  if (r < 2 || s < 1 || 2 * s > m) throw std::invalid_argument("need r >= 2, 1 <= s <= m/2");
  std::vector<Graph> pieces;
  for (int i = 0; i < s; ++i) pieces.push_back(complete_graph(2));
  if (m > 2 * s) pieces.push_back(empty_graph(m - 2 * s));
  Graph f = join({disjoint_union(pieces), turan_graph(m * (r - 1), r - 1)});
  if (f.order() != m * r) throw std::logic_error("member order mismatch");
  ForbiddenFamily fam = make_family({std::move(f)});
  if (fam.r != r) throw std::logic_error("member chromatic number mismatch");
  return fam;
}

CyclePowerParams cycle_power_params(int m, int k) {
  if (k < 2) throw std::invalid_argument("need k >= 2");
  CyclePowerParams cp;
  cp.m = m;
  cp.k = k;
  cp.h = m % (k + 1);
  cp.p = m / (k + 1);
  if (cp.h == 0) throw std::invalid_argument("m divisible by k+1");
  if (cp.p < 2) throw std::invalid_argument("need m >= 2(k+1)+1");
  cp.s = cp.h - ((cp.h - 1) / cp.p) * cp.p;
  cp.b = cp.s;
  cp.r = k + (cp.h + cp.p - 1) / cp.p;
  return cp;
}

std::vector<CheckItem> verify_cycle_power_facts(int m, int k) {
  CyclePowerParams cp = cycle_power_params(m, k);
  Graph f = graph_power(cycle_graph(m), k);
  std::vector<CheckItem> out;
  std::ostringstream os;

  int alpha = independence_number(f);
  os << "independence number " << alpha << ", expected " << cp.p;
  out.push_back({"independence", alpha == cp.p, os.str()});

  bool chi_ok = true;
  int worst = -1;
  std::vector<int> pick(cp.b - 1);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (!chi_ok) return;
    if (depth == cp.b - 1) {
      VertexSet keep = f.vertices();
      for (int v : pick) keep.reset(v);
      int chi = chromatic_number(induced_subgraph(f, keep));
      if (worst < 0 || chi < worst) worst = chi;
      if (chi < cp.r + 1) chi_ok = false;
      return;
    }
    for (int v = start; v < m; ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  os.str("");
  os << "chromatic number stays >= " << cp.r + 1 << " after deleting any " << cp.b - 1
     << " vertices; smallest seen " << worst;
  out.push_back({"deletion-chromatic", chi_ok, os.str()});

  Graph host = matching_turan_family(cp.b, m, cp.r).members[0];
  Embedding emb;
  bool contained = contains_subgraph(host, f, &emb);
  os.str("");
  os << "host order " << host.order();
  if (contained) {
    os << ", image";
    for (int v : emb.map) os << ' ' << v;
  }
  out.push_back({"host-containment", contained, os.str()});

  bool none = true;
  int bad_n = -1;
  for (int bign = m; bign <= m + 3; ++bign)
    if (contains_subgraph(apex_turan(cp.b, bign, cp.r), f)) {
      none = false;
      bad_n = bign;
      break;
    }
  os.str("");
  os << "hosts of order " << m << " to " << m + 3;
  if (!none) os << ", embeds at " << bad_n;
  out.push_back({"predicted-free", none, os.str()});
  return out;
}

std::optional<StructurePartition> structure_decompose(const Graph& g, const ForbiddenFamily& fam,
                                                      int m0, bool constrain_all) {
  if (fam.r < 2) throw std::invalid_argument("family needs r >= 2");
  if (m0 < 0) throw std::invalid_argument("m0 must be nonnegative");
  int r = fam.r;
  int n = g.order();
  if (n > 18) throw budget_error("structure decomposition capped at order 18");
  int q = q_value(fam);
  int wsize = q - 1;
  if (wsize > n) return std::nullopt;
  int rest = n - wsize;
  int lo = rest / r;
  int n_hi = rest % r;
  if (lo == 0) return std::nullopt;

  std::optional<StructurePartition> best;
  int best_obj = -1;

  auto consider = [&](VertexSet w, const std::vector<VertexSet>& parts) {
    std::vector<VertexSet> cores(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
      VertexSet outside = g.vertices() - parts[i];
      for (int v = parts[i].min(); v >= 0; v = parts[i].next(v + 1))
        if (g.row(v) == outside) cores[i].set(v);
    }
    int exempt = -1;
    if (constrain_all) {
      for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i].count() - cores[i].count() > m0) return;
    } else {
      // one part may escape the exception cap; pick the most helpful one
      for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i].count() - cores[i].count() > m0) {
          if (exempt >= 0) return;
          exempt = static_cast<int>(i);
        }
      if (exempt < 0) {
        exempt = 0;
        for (size_t i = 1; i < parts.size(); ++i)
          if (cores[i].count() < cores[exempt].count()) exempt = static_cast<int>(i);
      }
    }
    int obj = -1;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (static_cast<int>(i) == exempt) continue;
      int c = cores[i].count();
      obj = obj < 0 ? c : std::min(obj, c);
    }
    if (obj <= best_obj) return;
    StructurePartition sp;
    sp.hub = w;
    if (exempt >= 0) {
      sp.parts.push_back(parts[exempt]);
      sp.cores.push_back(cores[exempt]);
    }
    for (size_t i = 0; i < parts.size(); ++i) {
      if (static_cast<int>(i) == exempt) continue;
      sp.parts.push_back(parts[i]);
      sp.cores.push_back(cores[i]);
    }
    best_obj = obj;
    best = std::move(sp);
  };

  auto try_w = [&](VertexSet w) {
    // vertices with equal neighborhoods come consecutively, so partitions
    // that keep classes whole are explored before splits
    std::vector<int> vs = (g.vertices() - w).to_vector();
    std::stable_sort(vs.begin(), vs.end(),
                     [&](int a, int b) { return g.row(a) < g.row(b); });
    std::vector<VertexSet> parts(r);
    std::vector<int> sizes(r, 0);
    int hi_open = n_hi;
    auto rec = [&](auto&& self, size_t at, int used) -> void {
      if (at == vs.size()) {
        if (used != r) return;
        for (int j = 0; j < r; ++j)
          if (sizes[j] < lo) return;
        consider(w, parts);
        return;
      }
      if (r - used > static_cast<int>(vs.size() - at)) return;
      int v = vs[at];
      int top = std::min(used + 1, r);
      for (int j = 0; j < top; ++j) {
        if (sizes[j] >= lo + 1) continue;
        bool grows_hi = sizes[j] == lo;
        if (grows_hi && hi_open == 0) continue;
        parts[j].set(v);
        ++sizes[j];
        hi_open -= grows_hi;
        self(self, at + 1, std::max(used, j + 1));
        hi_open += grows_hi;
        --sizes[j];
        parts[j].reset(v);
      }
    };
    rec(rec, 0, 0);
  };

  if (wsize == 0) {
    try_w(VertexSet{});
  } else {
    std::vector<int> wpick(wsize);
    auto wrec = [&](auto&& self, int start, int depth) -> void {
      if (depth == wsize) {
        VertexSet w;
        for (int v : wpick) w.set(v);
        try_w(w);
        return;
      }
      for (int v = start; v < n; ++v) {
        wpick[depth] = v;
        self(self, v + 1, depth + 1);
      }
    };
    wrec(wrec, 0, 0);
  }
  return best;
}

std::optional<int> least_m0(const Graph& g, const ForbiddenFamily& fam, int cap) {
  for (int m0 = 0; m0 <= cap; ++m0)
    if (structure_decompose(g, fam, m0)) return m0;
  return std::nullopt;
}

SweepReport spex_agreement_sweep(int s, int m, int r, int n_lo, int n_hi, double tol,
                                 const SearchOptions& opts) {
  SweepReport sweep;
  sweep.s = s;
  sweep.m = m;
  sweep.r = r;
  ForbiddenFamily fam = matching_turan_family(s, m, r);
  double prev_rho = -1.0;
  for (int n = std::max(n_lo, s); n <= n_hi; ++n) {
    AgreementRow row;
    row.n = n;
    Graph pred = apex_turan(s, n, r);
    if (!is_family_free(pred, fam)) throw std::logic_error("predicted construction not free");
    std::string pred_g6 = canonical_g6(pred);
    row.rho_predicted = spectral_radius(pred).rho;
    row.ex_predicted = pred.edge_count();
    if (row.rho_predicted <= prev_rho) sweep.predicted_rho_monotone = false;
    prev_rho = row.rho_predicted;

    SearchReport sp = spex_search(n, fam, tol, opts);
    sweep.cache_hits += sp.disk_cache_hit;
    row.rho_max = sp.rho_value;
    row.spex_agrees = sp.witnesses == std::vector<std::string>{pred_g6};
    row.spex_unique = sp.unique;
    row.runner_up_gap = sp.runner_up_gap;
    row.witnesses_connected = true;
    row.min_degree_ratio = 1.0;
    for (const std::string& w : sp.witnesses) {
      Graph wg = graph6_decode(w);
      GraphStats st = basic_stats(wg);
      row.witnesses_connected = row.witnesses_connected && st.connected;
      row.min_degree_ratio =
          std::min(row.min_degree_ratio, static_cast<double>(st.min_degree) / n);
    }

    SearchReport ex = ex_search(n, fam, opts);
    sweep.cache_hits += ex.disk_cache_hit;
    row.ex_value = ex.edge_value;
    row.ex_agrees = ex.witnesses == std::vector<std::string>{pred_g6};
    sweep.rows.push_back(row);
  }
  for (int i = static_cast<int>(sweep.rows.size()) - 1; i >= 0; --i) {
    if (sweep.rows[i].spex_agrees && sweep.rows[i].spex_unique)
      sweep.spex_onset = sweep.rows[i].n;
    else
      break;
  }
  return sweep;
}

std::vector<CheckItem> path_bound_checks(int n_max, const std::vector<int>& ks,
                                         const SearchOptions& opts, long* cache_hits) {
  std::vector<CheckItem> out;
  for (int k : ks) {
    if (k < 2) throw std::invalid_argument("path bound needs k >= 2");
    ForbiddenFamily fam = make_family({path_graph(k)});
    for (int n = k; n <= n_max; ++n) {
      SearchReport ex = ex_search(n, fam, opts);
      if (cache_hits) *cache_hits += ex.disk_cache_hit;
      bool ok = 2 * ex.edge_value <= static_cast<long>(k - 2) * n;
      std::ostringstream os;
      os << "n=" << n << " k=" << k << " ex=" << ex.edge_value << " twice-ex="
         << 2 * ex.edge_value << " cap=" << (k - 2) * n;
      out.push_back({"path-bound", ok, os.str()});
    }
  }
  return out;
}

}  // namespace spexlab
