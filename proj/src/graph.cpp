#include "pg/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <numeric>

namespace pg {

int Graph::degree(int v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < order_; ++v) twice += degree(v);
  return twice / 2;
}

namespace {

int g6_byte(unsigned char c) {
  if (c < 63 || c > 126) throw Graph6Error("graph6 byte outside 63..126");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line, int max_order) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.empty()) throw Graph6Error("empty graph6 word");

  std::size_t pos = 0;
  long long n;
  if (static_cast<unsigned char>(line[0]) == 126) {
    if (line.size() < 4) throw Graph6Error("truncated graph6 order");
    if (static_cast<unsigned char>(line[1]) == 126)
      throw Graph6Error("graph6 orders above 258047 are not supported");
    n = (static_cast<long long>(g6_byte(line[1])) << 12) |
        (g6_byte(line[2]) << 6) | g6_byte(line[3]);
    if (n < 63) throw Graph6Error("non-minimal graph6 order encoding");
    pos = 4;
  } else {
    n = g6_byte(line[0]);
    pos = 1;
  }
  if (n > max_order) throw Graph6Error("graph6 order above configured maximum");

  Graph g(static_cast<int>(n), max_order);
  const long long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos < nbytes) throw Graph6Error("truncated graph6 word");
  if (line.size() - pos > nbytes) throw Graph6Error("trailing garbage after graph6 word");

  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int group = g6_byte(line[pos + bit / 6]);
      if ((group >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  for (; bit < static_cast<long long>(nbytes) * 6; ++bit) {
    const int group = g6_byte(line[pos + bit / 6]);
    if ((group >> (5 - bit % 6)) & 1) throw Graph6Error("nonzero graph6 padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw Graph6Error("order above graph6 three-byte length limit");
  }
  int group = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in, int max_order) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_graph6(line, max_order));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_lines(in, max_order);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<bool> seen(g.order(), false);
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
    if (seen[v]) throw std::invalid_argument("duplicate vertex in induced subgraph");
    seen[v] = true;
  }
  Graph h(k);
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

namespace {

// Canonical labeling by iterative color refinement plus individualization.
// Colors are always numbered 0..k-1 in an isomorphism-invariant order (by
// sorted signature), so two isomorphic graphs walk identical search trees.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    std::vector<int> colors = initial_colors();
    search(std::move(colors));
    return best_label_;
  }

 private:
  std::vector<int> initial_colors() const {
    std::vector<int> degs(n_);
    for (int v = 0; v < n_; ++v) degs[v] = g_.degree(v);
    std::vector<int> uniq = degs;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> colors(n_);
    for (int v = 0; v < n_; ++v)
      colors[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), degs[v]) -
                                   uniq.begin());
    return colors;
  }

  static int color_count(const std::vector<int>& colors) {
    int m = -1;
    for (int c : colors) m = std::max(m, c);
    return m + 1;
  }

  // One pass: signature of v is (color, sorted colors of neighbors); rewrites
  // colors as signature ranks. Returns true if the partition got finer.
  bool refine_step(std::vector<int>& colors) const {
    const int before = color_count(colors);
    std::vector<std::vector<int>> sig(n_);
    for (int v = 0; v < n_; ++v) {
      auto& s = sig[v];
      s.reserve(static_cast<std::size_t>(g_.degree(v)) + 1);
      s.push_back(colors[v]);
      for (int u = 0; u < n_; ++u)
        if (u != v && g_.adjacent(u, v)) s.push_back(colors[u]);
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    int next = 0;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
      colors[order[i]] = next;
    }
    return next + 1 > before;
  }

  void refine(std::vector<int>& colors) const {
    while (refine_step(colors)) {
    }
  }

  void search(std::vector<int> colors) {
    refine(colors);
    std::vector<int> cell_size(n_, 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[c] >= 2) {
        target = c;
        break;
      }
    }
    if (target < 0) {  // discrete: colors form a labeling
      consider_leaf(colors);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n_);
      for (int u = 0; u < n_; ++u) next[u] = colors[u] * 2 + (u == v ? 0 : 1);
      search(std::move(next));
    }
  }

  void consider_leaf(const std::vector<int>& label) {
    std::vector<std::uint64_t> bits = labeled_bits(label);
    if (!has_best_ || bits < best_bits_) {
      best_bits_ = std::move(bits);
      best_label_ = label;
      has_best_ = true;
    }
  }

  // Upper-triangle adjacency bits under the labeling, packed MSB-first so
  // word-wise comparison equals bit-sequence comparison.
  std::vector<std::uint64_t> labeled_bits(const std::vector<int>& label) const {
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[label[v]] = v;
    const long long nbits = static_cast<long long>(n_) * (n_ - 1) / 2;
    std::vector<std::uint64_t> words((nbits + 63) / 64, 0);
    long long idx = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i, ++idx) {
        if (g_.adjacent(inv[i], inv[j]))
          words[idx >> 6] |= 1ull << (63 - (idx & 63));
      }
    }
    return words;
  }

  const Graph& g_;
  int n_;
  bool has_best_ = false;
  std::vector<std::uint64_t> best_bits_;
  std::vector<int> best_label_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return {write_graph6(g)};
  const long long m = g.edge_count();
  // Every labeling of an empty or complete graph reads the same, so skip the
  // factorial search these two would otherwise trigger.
  if (m == 0 || m == static_cast<long long>(n) * (n - 1) / 2) return {write_graph6(g)};

  Canonizer canon(g);
  const std::vector<int> label = canon.run();
  Graph h(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (g.adjacent(u, v)) h.add_edge(label[u], label[v]);
  return {write_graph6(h)};
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace pg
