#ifndef RAMSEY_HOST_GRAPH_HPP
#define RAMSEY_HOST_GRAPH_HPP

#include "ramsey/graph.hpp"
#include "ramsey/ramsey_numbers.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

enum class HostStrategy { turan, witness, random };

std::string_view to_string(HostStrategy s);
HostStrategy host_strategy_from_string(std::string_view s);

/// Pattern graph for an embedding. Valid hosts satisfy:
///   - alpha(h) <= ell and omega(h) <= ell
///   - every cover set has exactly ell vertices and is a clique or an
///     independent set of h
///   - the cover sets together contain every vertex of h
struct HostGraph {
  Graph h;
  unsigned ell = 0;
  std::vector<VertexSet> cover;
};

struct HostValidation {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// Checks all three invariants with the exact solver; the diagnostic names
/// the first violated one.
HostValidation validate_host(const HostGraph &host);

/// Thrown when a strategy cannot produce a host. Never turned into an
/// answer for the composed instance.
struct HostSearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// ell = ceil(sqrt t) disjoint ell-cliques; group g holds vertices
/// g*ell .. g*ell+ell-1. Cover: the group cliques, then for each j the
/// independent set {j-th vertex of every group}.
HostGraph turan_complement_host(std::size_t t);

/// Cover extraction on a Ramsey witness for ell+1. Takes the first
/// T = R(ell) + t vertices of `witness`, repeatedly pulls a size-ell clique
/// or independent set out of the uncovered vertices while at least R(ell)
/// remain, prunes to a minimal family covering >= t vertices (reverse
/// acquisition order), and returns the subgraph induced by that family.
HostGraph witness_host(std::size_t t, unsigned ell, const Graph &witness,
                       const RamseyTable &table = RamseyTable::builtin());

struct RandomHostOptions {
  std::size_t t = 0;
  unsigned ell = 0;
  std::size_t order = 0; ///< T, vertices per sample
  std::size_t max_trials = 1000;
  std::uint64_t seed = 0;
};

/// Samples G(T, 1/2) with sub-seed derive_seed(seed, trial) until a sample
/// is a Ramsey witness for ell+1 whose greedy cover reaches t vertices. The
/// lowest accepted trial index wins.
HostGraph random_host(const RandomHostOptions &options);

/// Keeps a minimal sub-family whose union has at least `t` vertices,
/// dropping sets in reverse order while the union stays >= t. Exposed for
/// testing.
std::vector<VertexSet> prune_cover(std::vector<VertexSet> sets, std::size_t t,
                                   std::size_t n);

} // namespace ramsey

#endif // RAMSEY_HOST_GRAPH_HPP
