#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spexlab/enumerate.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/subgraph.hpp"

namespace spexlab {

struct SearchOptions {
  std::string cache_dir;
  int jobs = 0;
  bool allow_order_10 = false;
};

struct SearchReport {
  int n = 0;
  std::string mode;  // "edges" or "spectral"
  std::vector<std::string> family_g6;
  long edge_value = -1;     // edges mode
  double rho_value = -1.0;  // spectral mode
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  std::vector<double> witness_gaps;    // best value minus witness value, same order
  bool unique = false;
  double runner_up_gap = 0.0;  // best value minus best non-witness value
  long classes_total = 0;
  long classes_free = 0;
  bool disk_cache_hit = false;
};

// Maximize edges over family-free graphs of the given order (brute force over
// isomorphism classes).
SearchReport ex_search(int n, const ForbiddenFamily& fam, const SearchOptions& opts = {});

// Maximize spectral radius; witnesses are every class within tol of the
// maximum, "unique" additionally needs a runner-up gap above 1e-6.
SearchReport spex_search(int n, const ForbiddenFamily& fam, double tol = 1e-9,
                         const SearchOptions& opts = {});

// s-1 dominating vertices joined to the balanced complete r-partite graph on
// n-s+1 vertices. Requires n >= s >= 1, r >= 2.
Graph apex_turan(int s, int n, int r);

// Family with one member: (s disjoint edges + m-2s isolated vertices) joined
// to the balanced complete (r-1)-partite graph on m(r-1) vertices.
// Requires r >= 2, 1 <= s <= m/2. Member order mr, chromatic number r+1.
ForbiddenFamily matching_turan_family(int s, int m, int r);

struct CyclePowerParams {
  int m = 0, k = 0;
  int p = 0, h = 0;  // m = p(k+1) + h with 1 <= h <= k, p >= 2
  int b = 0, s = 0;  // b = s = h - floor((h-1)/p) * p
  int r = 0;         // k + ceil(h/p)
};

// Rejects m divisible by k+1 and m too small for p >= 2; k >= 2.
CyclePowerParams cycle_power_params(int m, int k);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string details;
};

// Exact combinatorial facts about the k-th power of the m-cycle:
// independence number p, chromatic number at least r+1 after deleting any b-1
// vertices, containment in the matching_turan_family(b,m,r) member, and
// non-containment in apex_turan(b,N,r) for N up to m+3.
std::vector<CheckItem> verify_cycle_power_facts(int m, int k);

struct StructurePartition {
  VertexSet hub;                   // q-1 vertices outside every part
  std::vector<VertexSet> parts;    // r near-equal parts covering the rest
  std::vector<VertexSet> cores;    // vertices of each part adjacent to all else
};

// Searches for a partition where every part consists of vertices adjacent to
// everything outside it, up to m0 exceptions per part. Maximizes the smallest
// core. constrain_all=false exempts the first part (the weaker shape).
std::optional<StructurePartition> structure_decompose(const Graph& g, const ForbiddenFamily& fam,
                                                      int m0, bool constrain_all = true);

// Smallest m0 <= cap for which structure_decompose succeeds.
std::optional<int> least_m0(const Graph& g, const ForbiddenFamily& fam, int cap);

struct AgreementRow {
  int n = 0;
  double rho_max = 0.0;
  double rho_predicted = 0.0;
  bool spex_agrees = false;  // witness set is exactly the predicted construction
  bool spex_unique = false;
  double runner_up_gap = 0.0;
  long ex_value = 0;
  long ex_predicted = 0;
  bool ex_agrees = false;
  bool witnesses_connected = false;
  double min_degree_ratio = 0.0;  // min over witnesses of delta(G)/n
};

struct SweepReport {
  int s = 0, m = 0, r = 0;
  std::vector<AgreementRow> rows;
  int spex_onset = -1;  // least n with agreement from there to the top of the range
  bool predicted_rho_monotone = true;  // rho of the predicted graph increases with n
  long cache_hits = 0;                 // enumeration disk-cache hits across both sweeps
};

// Brute-force check, for each n in [n_lo, n_hi], that the spectral-extremal
// witnesses for matching_turan_family(s,m,r) match apex_turan(s,n,r); edge
// counts are compared alongside.
SweepReport spex_agreement_sweep(int s, int m, int r, int n_lo, int n_hi, double tol = 1e-9,
                                 const SearchOptions& opts = {});

// Edge bound for path-free graphs: 2 * ex(n, {P_k}) <= (k-2) n, exhaustively
// for k in ks and each n in [k, n_max].
std::vector<CheckItem> path_bound_checks(int n_max, const std::vector<int>& ks,
                                         const SearchOptions& opts = {},
                                         long* cache_hits = nullptr);

}  // namespace spexlab
