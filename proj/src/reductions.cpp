#include "ramsey/reductions.hpp"

#include "ramsey/graph_ops.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

Instance clique_to_ramsey(const Graph &g, unsigned k) {
  const std::size_t n = g.size();
  if (n == 0 || k < 1 || k > n)
    throw std::invalid_argument("clique_to_ramsey: need 1 <= k <= n, got k = " +
                                std::to_string(k) + ", n = " +
                                std::to_string(n));
  return {join(g, Graph::complete(n + 1)),
          static_cast<unsigned>(k + n + 1),
          std::nullopt};
}

Instance ramsey_to_refinement(const Graph &g, unsigned k) {
  if (k < 3)
    throw std::invalid_argument(
        "ramsey_to_refinement: k must be at least 3, got " + std::to_string(k));
  const std::size_t n = g.size();
  const std::size_t c_begin = n;
  const std::size_t i_begin = n + k - 1;
  const std::size_t total = i_begin + k;

  GraphBuilder b(total);
  b.place(g, 0);
  b.place(Graph::complete(k - 1), c_begin);
  b.connect_ranges(i_begin, total, 0, i_begin);

  RefinementWitnesses w;
  for (std::size_t v = i_begin; v < total; ++v)
    w.independent_set.push_back(static_cast<Vertex>(v));
  for (std::size_t v = c_begin; v < i_begin; ++v)
    w.clique.push_back(static_cast<Vertex>(v));
  w.clique.push_back(static_cast<Vertex>(i_begin));

  return {std::move(b).build(), k + 1, std::move(w)};
}

} // namespace ramsey
