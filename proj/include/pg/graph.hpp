#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pg {

// Hard ceiling on graph order so adjacency stays a dense bit matrix.
// The decision procedure never needs more than (2n-1)*2^n+1 <= 497 vertices
// for n <= 5, so 512 leaves headroom.
inline constexpr int kDefaultMaxOrder = 512;

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Labeled simple graph with a symmetric, irreflexive adjacency relation,
/// stored as a dense bit matrix (one row of 64-bit words per vertex).
/// Immutable in spirit: all library operations build new graphs.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order, int max_order = kDefaultMaxOrder) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    if (order > max_order) throw std::invalid_argument("graph order above configured maximum");
    order_ = order;
    words_ = (order + 63) / 64;
    bits_.assign(static_cast<std::size_t>(order_) * words_, 0);
  }

  static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return order_; }
  int row_words() const { return words_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
  }

  void add_edge(int u, int v) { set_edge(u, v, true); }

  void set_edge(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    const std::uint64_t mu = 1ull << (u % 64), mv = 1ull << (v % 64);
    if (present) {
      bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= mv;
      bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= mu;
    } else {
      bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~mv;
      bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~mu;
    }
  }

  // Adjacency row of v as bit words; bit u set iff u ~ v.
  std::span<const std::uint64_t> row(int v) const {
    check_vertex(v);
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  int degree(int v) const;
  long long edge_count() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= order_) throw std::out_of_range("vertex out of range");
  }

  int order_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Canonical byte sequence uniquely identifying an isomorphism class. The
/// bytes are the graph6 word of the canonically relabeled graph, so a form
/// is printable and can be parsed back into a representative graph.
struct CanonicalForm {
  std::string bytes;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// graph6 serialization, bit-exact: order k as byte k+63 for k <= 62, or 126
// followed by three bytes holding k big-endian in 6-bit groups (+63 each) for
// 63 <= k <= 258047; then the upper-triangle bits x(0,1), x(0,2), x(1,2),
// x(0,3), ... packed 6 per byte, most significant first, zero-padded, each
// group +63. An optional leading ">>graph6<<" header is tolerated on parse.
Graph parse_graph6(std::string_view line, int max_order = kDefaultMaxOrder);
std::string write_graph6(const Graph& g);

// One graph per non-blank, non-'#' line.
std::vector<Graph> read_graph6_lines(std::istream& in, int max_order = kDefaultMaxOrder);
std::vector<Graph> read_graph6_file(const std::string& path, int max_order = kDefaultMaxOrder);

Graph complement(const Graph& g);

// Result vertex i inherits the adjacency of vertices[i]; vertices must be
// duplicate-free. Passing a permutation of all vertices relabels the graph.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

CanonicalForm canonical_form(const Graph& g);

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return canonical_form(a) == canonical_form(b);
}

// Small constructors shared by tests and generators.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}; center is vertex 0

}  // namespace pg
