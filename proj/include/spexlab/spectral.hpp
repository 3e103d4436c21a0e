#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> perron;  // unit 2-norm, entrywise >= 0
  double residual = 0.0;       // ||A x - rho x||_inf
  long iterations = 0;
};

// Largest adjacency eigenvalue with its nonnegative eigenvector. Power
// iteration on A+I from the all-ones vector; disconnected input is handled
// per component and the winning component's vector is zero-extended.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10);

// x^T A x = 2 sum_{uv in E} x_u x_v
double rayleigh(const Graph& g, const std::vector<double>& x);

struct RotationReport {
  bool connected = false;
  double removed_sum = 0.0;  // Perron mass of the deleted endpoints
  double added_sum = 0.0;
  bool sums_favor_added = false;  // added_sum >= removed_sum
  bool sets_differ = true;
  // connected && sums_favor_added && sets_differ: callers may assert that the
  // spectral radius strictly increased.
  bool increase_certified = false;
};

// Detach u from every vertex of dels, attach it to every vertex of adds.
// Requires dels a nonempty subset of N(u), adds nonempty and disjoint from
// N(u) + u; identical dels/adds are rejected.
std::pair<Graph, RotationReport> rotate_edges(const Graph& g, int u, const VertexSet& dels,
                                              const VertexSet& adds);

struct SwapSpec {
  VertexSet a, b;    // disjoint, nonempty, |a| > |b|
  VertexSet u1, u2;  // subsets of V - (a|b)
};

struct SwapCheck {
  bool pass = false;
  std::string clause;  // first failing one of: sets, |A|>|B|>0, connected, (i), (ii), (iii)
  double u1_sum = 0.0;
  double u2_sum = 0.0;
};

SwapCheck check_swap_preconditions(const Graph& g, const SwapSpec& spec, double tol = 1e-10);

// Rewire A's outside attachment from U1 to U2 and B's from U2 to U1.
// Throws unless check_swap_preconditions passes; the result then has strictly
// larger spectral radius.
Graph neighborhood_swap(const Graph& g, const SwapSpec& spec);

// (r-1)n/r - r/(4n), a lower bound for the spectral radius of the balanced
// complete r-partite graph on n vertices. Requires n >= r >= 1.
double turan_rho_floor(int n, int r);

}  // namespace spexlab
