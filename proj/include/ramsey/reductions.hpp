#ifndef RAMSEY_REDUCTIONS_HPP
#define RAMSEY_REDUCTIONS_HPP

#include "ramsey/graph.hpp"
#include "ramsey/instance.hpp"

namespace ramsey {

/// CLIQUE(g, k) -> RAMSEY: g joined to K_{n+1}, parameter k + n + 1.
/// The original vertices keep indices 0..n-1; the clique follows.
/// omega grows by n+1 while alpha stays <= n, so the output is a
/// yes-instance iff g has a k-clique. Requires 1 <= k <= n.
Instance clique_to_ramsey(const Graph &g, unsigned k);

/// RAMSEY(g, k) -> REFINEMENT RAMSEY(k+1), for k >= 3. Layout:
/// g (0..n-1), a clique C on k-1 vertices, then an independent set I on k
/// vertices joined to everything else. Attached witnesses: I, and C plus
/// the first vertex of I.
Instance ramsey_to_refinement(const Graph &g, unsigned k);

} // namespace ramsey

#endif // RAMSEY_REDUCTIONS_HPP
