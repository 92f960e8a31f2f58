#include "ramsey/graph_ops.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

Graph complement(const Graph &g) {
  const std::size_t n = g.size();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v))
        b.add_edge(u, v);
  return std::move(b).build();
}

Graph join(const Graph &g1, const Graph &g2) {
  const std::size_t n1 = g1.size();
  const std::size_t n = n1 + g2.size();
  GraphBuilder b(n);
  b.place(g1, 0).place(g2, n1).connect_ranges(0, n1, n1, n);
  return std::move(b).build();
}

Graph disjoint_union(const Graph &g1, const Graph &g2) {
  GraphBuilder b(g1.size() + g2.size());
  b.place(g1, 0).place(g2, g1.size());
  return std::move(b).build();
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> s) {
  std::vector<bool> seen(g.size(), false);
  for (Vertex v : s) {
    if (v >= g.size())
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " outside graph on " + std::to_string(g.size()) +
                              " vertices");
    if (seen[v])
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " repeated in induced_subgraph");
    seen[v] = true;
  }
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j]))
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

Graph connect_by_pattern(std::span<const Graph> locals, const Graph &pattern) {
  if (locals.size() != pattern.size())
    throw std::invalid_argument(
        "connect_by_pattern: " + std::to_string(locals.size()) +
        " local graphs for a pattern on " + std::to_string(pattern.size()) +
        " vertices");
  std::vector<std::size_t> offset(locals.size() + 1, 0);
  for (std::size_t i = 0; i < locals.size(); ++i)
    offset[i + 1] = offset[i] + locals[i].size();

  GraphBuilder b(offset.back());
  for (std::size_t i = 0; i < locals.size(); ++i)
    b.place(locals[i], offset[i]);
  for (const Edge &e : pattern.edges())
    b.connect_ranges(offset[e.u], offset[e.u + 1], offset[e.v],
                     offset[e.v + 1]);
  return std::move(b).build();
}

} // namespace ramsey
