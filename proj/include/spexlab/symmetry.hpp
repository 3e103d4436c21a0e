#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

// Disjoint connected induced subgraphs Q_1,...,Q_tau, pairwise non-adjacent,
// isomorphic via maps that preserve attachment to everything outside the
// union. maps[j-1][i] is the block-(j+1) image of the i-th smallest vertex of
// blocks[0].
struct SymmetricTuple {
  std::vector<VertexSet> blocks;
  std::vector<std::vector<int>> maps;
};

struct SymmetryCheck {
  bool ok = false;
  // first failing clause: blocks, connected, isomorphism, block-adjacency, attachment
  std::string clause;
};

SymmetryCheck are_symmetric_subgraphs(const Graph& g, const SymmetricTuple& tuple);

// Partition of V by equal open neighborhoods (equal rows force non-adjacency);
// classes ordered by least vertex, singletons included.
std::vector<VertexSet> symmetric_vertex_classes(const Graph& g);

// First verified tuple of tau blocks of equal size <= max_size, searched by
// block size upward and then lexicographically. Budget: n <= 40, max_size <= 4,
// tau <= 6.
std::optional<SymmetricTuple> find_symmetric_subgraphs(const Graph& g, int tau, int max_size);

struct SymmetricExtension {
  Graph graph;           // host plus one fresh copy of blocks[0]
  SymmetricTuple tuple;  // original blocks plus the new one, verified in graph
};

// Requires a verified tuple. The new block duplicates blocks[0] together with
// its attachment outside the union; with tau >= |F| this cannot create a copy
// of any F the host lacks.
SymmetricExtension extend_by_symmetric_copy(const Graph& g, const SymmetricTuple& tuple);

struct PartitionWitness {
  VertexSet removed;
  std::vector<VertexSet> parts;                  // G - removed is their join
  std::vector<std::vector<VertexSet>> part_blocks;  // per part: its components
};

// Membership in the family of graphs that, after deleting at most c vertices,
// split as a join of r graphs of order within c of n/r whose components form
// symmetric tuples in the original graph. Exhaustive; n <= 12 and c <= 3.
std::optional<PartitionWitness> check_d_membership(const Graph& g, int r, int c);

}  // namespace spexlab
