#ifndef RAMSEY_INSTANCE_HPP
#define RAMSEY_INSTANCE_HPP

#include "ramsey/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramsey {

/// A (k-1)-clique and a (k-1)-independent set of the instance graph.
struct RefinementWitnesses {
  VertexSet clique;
  VertexSet independent_set;

  friend bool operator==(const RefinementWitnesses &,
                         const RefinementWitnesses &) = default;
};

/// RAMSEY(k) instance: does `graph` have a clique or independent set of
/// size k? With witnesses attached it is also a refinement instance.
struct Instance {
  Graph graph;
  unsigned k = 0;
  std::optional<RefinementWitnesses> witnesses;
};

enum class Answer { no, yes };

inline std::string_view to_string(Answer a) { return a == Answer::yes ? "yes" : "no"; }

struct IllegalInstanceError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Throws IllegalInstanceError unless the instance is a legal refinement
/// instance: attached witnesses must have exactly k-1 vertices and induce
/// what they claim; without witnesses the exact solver must find both.
void check_refinement(const Instance &inst);

bool is_legal_refinement(const Instance &inst);

/// Solves for a (k-1)-clique and (k-1)-independent set; nullopt if either
/// is missing.
std::optional<RefinementWitnesses> find_refinement_witnesses(const Graph &g,
                                                             unsigned k);

} // namespace ramsey

#endif // RAMSEY_INSTANCE_HPP
