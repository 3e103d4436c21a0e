#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "spexlab/graph.hpp"

namespace spexlab {

// mt19937_64 with hand-rolled draws so streams are identical across standard
// library implementations
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double real01() { return (engine_() >> 11) * 0x1.0p-53; }
  bool coin(double p = 0.5) { return real01() < p; }

 private:
  std::mt19937_64 engine_;
};

Graph random_graph(Rng& rng, int n, double p);
// random spanning tree plus p-density extra edges
Graph random_connected_graph(Rng& rng, int n, double p);

struct TrialSummary {
  std::string name;
  long trials = 0;
  long violations = 0;
  long attempts = 0;       // generator draws, including rejected ones
  double min_margin = 0.0; // spectral harnesses only
  std::uint64_t seed = 0;
  std::string worst;       // instance description for the smallest margin or a violation
};

// Spanning proper subgraphs of connected hosts keep a strictly smaller
// spectral radius; a margin at or below 1e-9 counts as a violation.
TrialSummary subgraph_monotonicity_trials(long trials, std::uint64_t seed, int n_max = 10);

// Random certified edge rotations strictly increase the spectral radius
// (margin > 1e-12, near-ties recomputed at tolerance 1e-13).
TrialSummary rotation_trials(long trials, std::uint64_t seed, int n_max = 10);

// Random instances passing the bipartite-swap preconditions strictly increase
// the spectral radius; same margin policy as rotations.
TrialSummary swap_trials(long trials, std::uint64_t seed);

// |intersection| >= sum |A_i| - (l-1) |union| over random set families,
// exact integer arithmetic.
TrialSummary intersection_trials(long trials, std::uint64_t seed);

// Adding one more symmetric copy preserves family-freeness when the tuple has
// at least max-member-order blocks.
TrialSummary symmetric_extension_trials(long trials, std::uint64_t seed);

}  // namespace spexlab
