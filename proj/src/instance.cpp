#include "ramsey/instance.hpp"

#include "ramsey/solver.hpp"

namespace ramsey {

std::optional<RefinementWitnesses> find_refinement_witnesses(const Graph &g,
                                                             unsigned k) {
  if (k == 0)
    throw std::invalid_argument("k must be positive");
  auto c = find_clique(g, k - 1);
  if (!c)
    return std::nullopt;
  auto i = find_independent_set(g, k - 1);
  if (!i)
    return std::nullopt;
  return RefinementWitnesses{std::move(c->members), std::move(i->members)};
}

void check_refinement(const Instance &inst) {
  const std::size_t need = inst.k == 0 ? 0 : inst.k - 1;
  if (inst.k == 0)
    throw IllegalInstanceError("k must be positive");
  if (!inst.witnesses) {
    if (!find_refinement_witnesses(inst.graph, inst.k))
      throw IllegalInstanceError("graph lacks a clique or an independent set "
                                 "of size k-1 = " +
                                 std::to_string(need));
    return;
  }
  const auto &w = *inst.witnesses;
  if (w.clique.size() != need || w.independent_set.size() != need)
    throw IllegalInstanceError("witnesses must have k-1 = " +
                               std::to_string(need) + " vertices");
  if (!certifies(inst.graph, {HomogeneousKind::clique, w.clique}))
    throw IllegalInstanceError("clique witness is not a clique of the graph");
  if (!certifies(inst.graph, {HomogeneousKind::independent_set,
                              w.independent_set}))
    throw IllegalInstanceError(
        "independent-set witness is not independent in the graph");
}

bool is_legal_refinement(const Instance &inst) {
  try {
    check_refinement(inst);
    return true;
  } catch (const IllegalInstanceError &) {
    return false;
  }
}

} // namespace ramsey
