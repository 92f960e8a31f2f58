#include "ramsey/random.hpp"

namespace ramsey {

Graph random_graph(std::size_t n, Rng &rng) {
  GraphBuilder b(n);
  std::uint64_t pool = 0;
  unsigned left = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      if (left == 0) {
        pool = rng.next();
        left = 64;
      }
      if (pool & 1U)
        b.add_edge(i, j);
      pool >>= 1;
      --left;
    }
  return std::move(b).build();
}

} // namespace ramsey
