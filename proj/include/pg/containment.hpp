#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

/// Injective map from pattern vertices to host vertices preserving both
/// adjacency and non-adjacency (induced embedding).
struct Embedding {
  std::vector<int> map;  // map[pattern vertex] = host vertex
};

// Backtracking search over vertex assignments with adjacency-consistency,
// degree and neighbor-degree-multiset pruning. Pattern vertices are assigned
// most-constrained-first (descending degree); host candidates are tried in
// ascending vertex order, so the result is deterministic.
std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host);

/// Outcome of an L-freeness test; false-y when some forbidden graph embeds,
/// in which case violating_index is the least offending index.
struct LFreeness {
  std::optional<int> violating_index;
  explicit operator bool() const { return !violating_index.has_value(); }
};

// Rejects 0-vertex members of the forbidden set.
LFreeness is_l_free(const Graph& g, std::span<const Graph> forbidden);

namespace detail {

// Embedding test where some pattern vertex must map to the given host vertex.
// Used to test one-vertex extensions of a graph already known to be free.
bool embeds_using_host_vertex(const Graph& pattern, const Graph& host, int host_vertex);

}  // namespace detail

}  // namespace pg
