#ifndef RAMSEY_SOLVER_HPP
#define RAMSEY_SOLVER_HPP

#include "ramsey/graph.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace ramsey {

enum class HomogeneousKind { clique, independent_set };

std::string_view to_string(HomogeneousKind kind);

/// A vertex set together with the claim it makes about the graph it came
/// from. Members are sorted ascending.
struct HomogeneousWitness {
  HomogeneousKind kind = HomogeneousKind::clique;
  VertexSet members;

  std::size_t size() const { return members.size(); }

  friend bool operator==(const HomogeneousWitness &,
                         const HomogeneousWitness &) = default;
};

bool is_clique(const Graph &g, std::span<const Vertex> members);
bool is_independent_set(const Graph &g, std::span<const Vertex> members);

/// True when the members are in range, distinct, and induce what `w.kind`
/// claims.
bool certifies(const Graph &g, const HomogeneousWitness &w);

/// Maximum clique by branch and bound: bitset candidate sets, greedy colour
/// classes as the upper bound, vertices pre-ordered by non-increasing degree.
/// Deterministic for a given graph. The empty graph yields an empty witness.
HomogeneousWitness max_clique(const Graph &g);

/// Runs max_clique on the complement.
HomogeneousWitness max_independent_set(const Graph &g);

/// Decision form of the clique search: a clique of exactly k vertices if
/// omega(g) >= k. Stops at the first one found.
std::optional<HomogeneousWitness> find_clique(const Graph &g, std::size_t k);
std::optional<HomogeneousWitness> find_independent_set(const Graph &g,
                                                       std::size_t k);

/// RAMSEY(k) decision. Cliques are searched first; the witness has exactly
/// k members.
std::optional<HomogeneousWitness> has_homogeneous(const Graph &g,
                                                  std::size_t k);

/// max(alpha(g), omega(g)).
std::size_t max_homogeneous_size(const Graph &g);

struct OracleGuardError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t brute_force_vertex_guard = 30;

/// Reference oracle with the same contract as has_homogeneous: walks every
/// k-subset in lexicographic order and tests all pairs. Only for
/// cross-checking. Refuses graphs above brute_force_vertex_guard vertices
/// unless `override_guard` is set.
std::optional<HomogeneousWitness>
brute_force_homogeneous(const Graph &g, std::size_t k,
                        bool override_guard = false);

} // namespace ramsey

#endif // RAMSEY_SOLVER_HPP
