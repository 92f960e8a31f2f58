#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsey {

using Vertex = std::uint32_t;

/// Ordered list of vertex indices. Order matters where a caller relabels
/// (induced_subgraph keeps it), otherwise it is treated as a set.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge &, const Edge &) = default;
};

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

inline constexpr std::size_t words_for(std::size_t n) {
  return (n + word_bits - 1) / word_bits;
}

/// Undirected simple graph on vertices 0..n-1. Each vertex owns one
/// fixed-width bit row of its neighbours. Immutable once built; use
/// GraphBuilder or one of the factories to make one.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph complete(std::size_t n);
  static Graph edgeless(std::size_t n) { return Graph(n); }
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  static Graph petersen();

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / word_bits] >> (v % word_bits)) & 1U;
  }

  std::span<const Word> row(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }

  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;

  /// Edges with u < v, ascending lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// Mutable staging area for a Graph. Adding an existing edge is a no-op.
class GraphBuilder {
public:
  explicit GraphBuilder(std::size_t n);

  std::size_t size() const { return graph_.n_; }

  GraphBuilder &add_edge(Vertex u, Vertex v);
  GraphBuilder &remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }

  /// Makes every pair in `members` adjacent (clique) or non-adjacent.
  GraphBuilder &make_clique(std::span<const Vertex> members);
  GraphBuilder &make_independent(std::span<const Vertex> members);

  /// Copies `g` into vertices offset..offset+g.size()-1.
  GraphBuilder &place(const Graph &g, std::size_t offset);

  /// Adds every edge between the two half-open vertex intervals.
  GraphBuilder &connect_ranges(std::size_t a_begin, std::size_t a_end,
                               std::size_t b_begin, std::size_t b_end);

  Graph build() &&;
  Graph build() const &;

private:
  void check(Vertex u, Vertex v) const;
  void set(Vertex u, Vertex v, bool on);

  Graph graph_;
};

// Word-parallel helpers over bit rows.
namespace bits {

inline std::size_t count(std::span<const Word> s) {
  std::size_t c = 0;
  for (Word w : s)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool any(std::span<const Word> s) {
  for (Word w : s)
    if (w)
      return true;
  return false;
}

inline void set(std::span<Word> s, std::size_t i) {
  s[i / word_bits] |= Word{1} << (i % word_bits);
}

inline void reset(std::span<Word> s, std::size_t i) {
  s[i / word_bits] &= ~(Word{1} << (i % word_bits));
}

inline bool test(std::span<const Word> s, std::size_t i) {
  return (s[i / word_bits] >> (i % word_bits)) & 1U;
}

template <class F> void for_each(std::span<const Word> s, F &&f) {
  for (std::size_t w = 0; w < s.size(); ++w) {
    Word x = s[w];
    while (x) {
      f(w * word_bits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

} // namespace bits

} // namespace ramsey

#endif // RAMSEY_GRAPH_HPP
