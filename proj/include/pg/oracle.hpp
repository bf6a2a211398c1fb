#pragma once

#include <map>
#include <span>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

/// All non-isomorphic graphs of a given order, one canonical representative
/// each, sorted by canonical form.
struct GraphCatalog {
  int order = 0;
  std::vector<Graph> members;
};

// Iterates all 2^{k(k-1)/2} labeled adjacency patterns and deduplicates by
// canonical form. Supported for 1 <= k <= 7; expected class counts are
// 1, 2, 4, 11, 34, 156, 1044.
GraphCatalog enumerate_all_graphs(int order);

// Direct subset scan of the homogeneous-set definition: every X with
// 2 <= |X| < order is tested literally. Order <= 16. Deliberately shares no
// machinery with the main primality module; its value is independence.
bool naive_is_prime(const Graph& g);

// Catalog per order 1..max_order, filtered to naive-prime and L-free.
// max_order <= 7.
std::map<int, std::vector<Graph>> naive_primes_up_to(std::span<const Graph> forbidden,
                                                     int max_order);

}  // namespace pg
