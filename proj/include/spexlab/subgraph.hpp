#pragma once

#include <optional>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

// Injective map pattern-vertex -> host-vertex preserving pattern edges
// (not necessarily induced).
struct Embedding {
  std::vector<int> map;
};

bool contains_subgraph(const Graph& host, const Graph& pattern, Embedding* witness = nullptr);

struct ForbiddenFamily {
  std::vector<Graph> members;  // sorted by (order, edge count)
  int r = 0;                   // smallest member chromatic number, minus one
  int t = 0;                   // largest member order
  bool theorem_ready = false;  // r >= 2
};

// Members must be nonempty graphs.
ForbiddenFamily make_family(std::vector<Graph> members);

bool is_family_free(const Graph& g, const ForbiddenFamily& fam);

int chromatic_number(const Graph& g);
int independence_number(const Graph& g);
int clique_number(const Graph& g);
int matching_number(const Graph& g);

// Smallest s >= 0 such that some member embeds into the join of s isolated
// vertices with the balanced complete r-partite graph on t*r vertices.
// Requires fam.r >= 1; always at most t.
int q_value(const ForbiddenFamily& fam);

struct IntersectionBound {
  long bound = 0;  // sum of sizes minus (l-1) * union size; may be negative
  long actual = 0; // size of the common intersection
  bool holds = false;
};

// Needs at least two sets.
IntersectionBound intersection_lower_bound(const std::vector<std::vector<int>>& sets);

}  // namespace spexlab
