#include "pg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <set>
#include <stdexcept>

#include "pg/containment.hpp"
#include "pg/parallel.hpp"

namespace pg {

namespace {

Graph graph_from_mask(int order, std::uint64_t mask) {
  Graph g(order);
  int bit = 0;
  for (int v = 1; v < order; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

}  // namespace

GraphCatalog enumerate_all_graphs(int order) {
  if (order < 1 || order > 7)
    throw std::invalid_argument("enumerate_all_graphs supports orders 1..7");
  const int nbits = order * (order - 1) / 2;
  const std::uint64_t total = 1ull << nbits;

  std::set<std::string> forms;
  std::mutex mu;
  parallel_ranges(total, 0, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    std::set<std::string> local;
    for (std::uint64_t mask = begin; mask < end; ++mask)
      local.insert(canonical_form(graph_from_mask(order, mask)).bytes);
    std::lock_guard<std::mutex> lock(mu);
    forms.merge(local);
  });

  GraphCatalog catalog;
  catalog.order = order;
  catalog.members.reserve(forms.size());
  for (const auto& f : forms) catalog.members.push_back(parse_graph6(f));
  return catalog;
}

bool naive_is_prime(const Graph& g) {
  const int n = g.order();
  if (n > 16) throw std::invalid_argument("naive_is_prime supports orders <= 16");
  if (n < 3) return true;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t x = 0; x <= full; ++x) {
    const int size = std::popcount(x);
    if (size < 2 || size >= n) continue;
    bool homogeneous = true;
    for (int w = 0; w < n && homogeneous; ++w) {
      if ((x >> w) & 1) continue;
      std::uint32_t nbrs = 0;
      for (int u = 0; u < n; ++u)
        if (u != w && g.adjacent(u, w)) nbrs |= 1u << u;
      const std::uint32_t inside = nbrs & x;
      if (inside != 0 && inside != x) homogeneous = false;
    }
    if (homogeneous) return false;
  }
  return true;
}

std::map<int, std::vector<Graph>> naive_primes_up_to(std::span<const Graph> forbidden,
                                                     int max_order) {
  if (max_order < 1 || max_order > 7)
    throw std::invalid_argument("naive_primes_up_to supports orders 1..7");
  std::map<int, std::vector<Graph>> out;
  for (int k = 1; k <= max_order; ++k) {
    std::vector<Graph> primes;
    for (const Graph& g : enumerate_all_graphs(k).members)
      if (naive_is_prime(g) && is_l_free(g, forbidden)) primes.push_back(g);
    out[k] = std::move(primes);
  }
  return out;
}

}  // namespace pg
