#ifndef RAMSEY_GRAPH_OPS_HPP
#define RAMSEY_GRAPH_OPS_HPP

#include "ramsey/graph.hpp"

#include <span>

namespace ramsey {

Graph complement(const Graph &g);

/// Vertices of g1 first, then g2, with every cross pair adjacent.
Graph join(const Graph &g1, const Graph &g2);

/// Vertices of g1 first, then g2, no cross edges.
Graph disjoint_union(const Graph &g1, const Graph &g2);

/// Subgraph induced by `s`; new vertex i is s[i]. Throws std::out_of_range
/// on a vertex outside g and std::invalid_argument on a repeated vertex.
Graph induced_subgraph(const Graph &g, std::span<const Vertex> s);

/// Disjoint union of `locals` in order, plus every edge between blocks u and
/// v whenever pattern.adjacent(u, v).
Graph connect_by_pattern(std::span<const Graph> locals, const Graph &pattern);

} // namespace ramsey

#endif // RAMSEY_GRAPH_OPS_HPP
