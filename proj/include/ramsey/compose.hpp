#ifndef RAMSEY_COMPOSE_HPP
#define RAMSEY_COMPOSE_HPP

#include "ramsey/embedding.hpp"
#include "ramsey/host_graph.hpp"
#include "ramsey/instance.hpp"
#include "ramsey/ramsey_numbers.hpp"

#include <cstdint>
#include <span>
#include <variant>

namespace ramsey {

struct ComposeOptions {
  HostStrategy strategy = HostStrategy::turan;
  std::uint64_t seed = 0;
  RamseyTable table = RamseyTable::builtin();
  // Random strategy only. Zero picks the table gap: ell from smallest_gap
  // and T = R(ell) + t.
  unsigned random_ell = 0;
  std::size_t random_order = 0;
  std::size_t random_trials = 10000;
};

struct Composition {
  EmbedResult embedding;
  HostGraph host;
  HostStrategy strategy = HostStrategy::turan;
  std::uint64_t seed = 0;
};

/// Either the direct answer of the k < 3 path or the composed instance.
using ComposeOutput = std::variant<Answer, Composition>;

/// k in {1, 2}: any vertex is a 1-set and any two vertices form an edge or
/// a non-edge, so the answer only depends on instance sizes.
Answer small_k_solve(std::span<const Instance> instances);

/// Built-in Ramsey witness for ell + 1, re-verified on every call:
/// Paley(5) for ell = 2, Paley(17) for ell = 3.
Graph builtin_witness(unsigned ell);

/// Host for t instances under the chosen strategy, validated. Throws
/// HostSearchError if the strategy cannot deliver one.
HostGraph make_host(std::size_t t, const ComposeOptions &options);

/// t same-k instances to one instance whose answer is the OR of theirs.
/// Errors (mixed k, illegal refinement instance, host failure) are thrown;
/// a failed host search is never reported as an answer.
ComposeOutput compose(std::span<const Instance> instances,
                      const ComposeOptions &options);

} // namespace ramsey

#endif // RAMSEY_COMPOSE_HPP
