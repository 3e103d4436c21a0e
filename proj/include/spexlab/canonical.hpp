#pragma once

#include <string>

#include "spexlab/graph.hpp"

namespace spexlab {

// Canonical representative of the isomorphism class: the relabeling whose
// adjacency bit string is lexicographically least among the labelings the
// refinement search visits. Deterministic, idempotent.
Graph canonical_form(const Graph& g);
std::string canonical_g6(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace spexlab
