#include "pg/primality.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace pg {

namespace {

// Closure state kept as bit words to make the O(n^4) pair scan cheap at the
// orders the census touches.
class ClosureScratch {
 public:
  explicit ClosureScratch(const Graph& g)
      : g_(g), n_(g.order()), words_(g.row_words()), in_set_(words_, 0) {}

  // Runs the closure from {u,v}; returns the number of members and leaves the
  // membership mask in mask().
  int run(int u, int v) {
    for (auto& w : in_set_) w = 0;
    set(u);
    set(v);
    int size = 2;
    for (;;) {
      const int violator = find_violator();
      if (violator < 0) break;
      set(violator);
      ++size;
    }
    return size;
  }

  const std::vector<std::uint64_t>& mask() const { return in_set_; }

  bool contains(int v) const { return (in_set_[v / 64] >> (v % 64)) & 1; }

 private:
  void set(int v) { in_set_[v / 64] |= 1ull << (v % 64); }

  // Lowest-index vertex outside the set with both a neighbor and a
  // non-neighbor inside it.
  int find_violator() const {
    for (int w = 0; w < n_; ++w) {
      if (contains(w)) continue;
      const auto row = g_.row(w);
      bool neighbor = false, non_neighbor = false;
      for (int i = 0; i < words_; ++i) {
        const std::uint64_t inside = in_set_[i];
        if ((row[i] & inside) != 0) neighbor = true;
        if ((~row[i] & inside) != 0) non_neighbor = true;
      }
      if (neighbor && non_neighbor) return w;
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  int words_;
  std::vector<std::uint64_t> in_set_;
};

// A twin pair (equal neighborhoods outside the pair) is already a homogeneous
// set; checking for one first rejects most non-primes without any closures.
bool has_twin_pair(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  const int words = g.row_words();
  for (int v = 1; v < n; ++v) {
    const auto rv = g.row(v);
    for (int u = 0; u < v; ++u) {
      const auto ru = g.row(u);
      bool twin = true;
      for (int i = 0; i < words && twin; ++i) {
        std::uint64_t diff = ru[i] ^ rv[i];
        if (u / 64 == i) diff &= ~(1ull << (u % 64));
        if (v / 64 == i) diff &= ~(1ull << (v % 64));
        if (diff != 0) twin = false;
      }
      if (twin) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> minimal_module_closure(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("closure requires two distinct vertices");
  ClosureScratch scratch(g);
  scratch.run(u, v);
  std::vector<int> out;
  for (int w = 0; w < g.order(); ++w)
    if (scratch.contains(w)) out.push_back(w);
  return out;
}

std::optional<HomogeneousSetWitness> find_homogeneous_set(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  ClosureScratch scratch(g);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (scratch.run(u, v) < n) {
        HomogeneousSetWitness w;
        for (int x = 0; x < n; ++x)
          if (scratch.contains(x)) w.members.push_back(x);
        return w;
      }
    }
  }
  return std::nullopt;
}

bool is_prime(const Graph& g) {
  const int n = g.order();
  if (n < 3) return true;
  if (has_twin_pair(g)) return false;
  ClosureScratch scratch(g);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (scratch.run(u, v) < n) return false;
  return true;
}

}  // namespace pg
