#pragma once

#include <optional>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

/// A set X with 2 <= |X| < |V| such that every vertex outside X is adjacent
/// to all of X or to none of X.
struct HomogeneousSetWitness {
  std::vector<int> members;
};

// The unique inclusion-minimal set X containing {u,v} such that no outside
// vertex has both a neighbor and a non-neighbor in X. Violating vertices are
// absorbed lowest-index first; the result does not depend on that order.
// May return the full vertex set.
std::vector<int> minimal_module_closure(const Graph& g, int u, int v);

// Scans vertex pairs in lexicographic order and returns the first pair whose
// closure is a proper subset of V; none iff the graph is prime.
std::optional<HomogeneousSetWitness> find_homogeneous_set(const Graph& g);

// Graphs of order <= 2 are vacuously prime: no X satisfies 2 <= |X| < order.
bool is_prime(const Graph& g);

}  // namespace pg
