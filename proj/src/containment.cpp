#include "pg/containment.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pg {

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host)
      : pattern_(pattern), host_(host), p_(pattern.order()), h_(host.order()) {
    pdeg_.resize(p_);
    for (int v = 0; v < p_; ++v) pdeg_[v] = pattern_.degree(v);
    hdeg_.resize(h_);
    for (int v = 0; v < h_; ++v) hdeg_[v] = host_.degree(v);
    pnd_ = neighbor_degrees(pattern_, pdeg_);
    hnd_ = neighbor_degrees(host_, hdeg_);

    order_.resize(p_);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (pdeg_[a] != pdeg_[b]) return pdeg_[a] > pdeg_[b];
      return a < b;
    });

    map_.assign(p_, -1);
    used_.assign(h_, false);
  }

  // forced: optional (pattern vertex, host vertex) pre-assignment.
  std::optional<Embedding> run(int forced_pv = -1, int forced_hv = -1) {
    forced_pv_ = forced_pv;
    forced_hv_ = forced_hv;
    std::fill(map_.begin(), map_.end(), -1);
    std::fill(used_.begin(), used_.end(), false);
    if (p_ > h_) return std::nullopt;
    if (forced_pv_ >= 0 && !feasible(forced_pv_, forced_hv_)) return std::nullopt;
    if (!dfs(0)) return std::nullopt;
    return Embedding{map_};
  }

 private:
  static std::vector<std::vector<int>> neighbor_degrees(const Graph& g,
                                                        const std::vector<int>& deg) {
    std::vector<std::vector<int>> nd(g.order());
    for (int v = 0; v < g.order(); ++v) {
      for (int u = 0; u < g.order(); ++u)
        if (u != v && g.adjacent(u, v)) nd[v].push_back(deg[u]);
      std::sort(nd[v].rbegin(), nd[v].rend());
    }
    return nd;
  }

  bool feasible(int pv, int hv) const {
    if (hdeg_[hv] < pdeg_[pv]) return false;
    // Descending-sorted comparison decides whether the pattern's neighbor
    // degree multiset injects into the host's.
    const auto& pd = pnd_[pv];
    const auto& hd = hnd_[hv];
    for (std::size_t i = 0; i < pd.size(); ++i)
      if (hd[i] < pd[i]) return false;
    return true;
  }

  bool consistent(int pv, int hv, int depth) const {
    for (int d = 0; d < depth; ++d) {
      const int q = order_[d];
      if (pattern_.adjacent(pv, q) != host_.adjacent(hv, map_[q])) return false;
    }
    return true;
  }

  bool dfs(int depth) {
    if (depth == p_) return true;
    const int pv = order_[depth];
    if (pv == forced_pv_) {
      const int hv = forced_hv_;
      if (used_[hv] || !consistent(pv, hv, depth)) return false;
      used_[hv] = true;
      map_[pv] = hv;
      if (dfs(depth + 1)) return true;
      used_[hv] = false;
      map_[pv] = -1;
      return false;
    }
    for (int hv = 0; hv < h_; ++hv) {
      if (used_[hv] || !feasible(pv, hv) || !consistent(pv, hv, depth)) continue;
      used_[hv] = true;
      map_[pv] = hv;
      if (dfs(depth + 1)) return true;
      used_[hv] = false;
      map_[pv] = -1;
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  int p_, h_;
  int forced_pv_ = -1, forced_hv_ = -1;
  std::vector<int> pdeg_, hdeg_;
  std::vector<std::vector<int>> pnd_, hnd_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host) {
  if (pattern.order() == 0) return Embedding{};
  if (pattern.order() > host.order()) return std::nullopt;
  EmbeddingSearch search(pattern, host);
  return search.run();
}

LFreeness is_l_free(const Graph& g, std::span<const Graph> forbidden) {
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    if (forbidden[i].order() == 0)
      throw std::invalid_argument("forbidden set contains a 0-vertex graph");
    if (find_induced_embedding(forbidden[i], g)) return {static_cast<int>(i)};
  }
  return {};
}

namespace detail {

bool embeds_using_host_vertex(const Graph& pattern, const Graph& host, int host_vertex) {
  if (pattern.order() == 0 || pattern.order() > host.order()) return false;
  EmbeddingSearch search(pattern, host);
  for (int pv = 0; pv < pattern.order(); ++pv)
    if (search.run(pv, host_vertex)) return true;
  return false;
}

}  // namespace detail

}  // namespace pg
