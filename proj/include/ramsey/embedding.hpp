#ifndef RAMSEY_EMBEDDING_HPP
#define RAMSEY_EMBEDDING_HPP

#include "ramsey/graph.hpp"
#include "ramsey/host_graph.hpp"
#include "ramsey/instance.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ramsey {

/// D_c: a (c-2)-clique joined to an independent set of c-1 vertices, clique
/// first. alpha(D_c) = omega(D_c) = c-1. Requires c >= 2.
Graph dummy_graph(unsigned c);

/// Local block for one instance with parameter k >= 3:
///
///   (G join D_k) disjoint-union (complement(G) join D_k)
///
/// laid out as G, D_k, complement(G), D_k. The dummy has alpha = omega =
/// k-1, so a legal no-instance gives alpha = omega = 2k-2 and a
/// yes-instance reaches 2k-1 on both.
Graph local_graph(const Instance &inst);

/// Vertices in a block: 2 (n + 2k - 3).
std::size_t local_graph_order(std::size_t n, unsigned k);

struct BlockRange {
  std::size_t begin = 0; ///< first vertex of the block in g_prime
  std::size_t end = 0;   ///< one past the last

  friend bool operator==(const BlockRange &, const BlockRange &) = default;
};

struct EmbedResult {
  Graph g_prime;
  unsigned k_prime = 0; ///< ell (2k - 2) + 1
  unsigned ell = 0;
  std::vector<std::size_t> assignment; ///< host vertex -> instance index
  std::vector<BlockRange> block_ranges; ///< host vertex -> block in g_prime
};

/// Assigns instance v mod t to host vertex v, builds each vertex's local
/// graph, and fully connects blocks of adjacent host vertices. Blocks are
/// laid out in host-vertex order. The host is not re-validated here.
EmbedResult embed(const HostGraph &host, unsigned k,
                  std::span<const Instance> instances);

} // namespace ramsey

#endif // RAMSEY_EMBEDDING_HPP
