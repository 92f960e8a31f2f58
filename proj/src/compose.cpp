#include "ramsey/compose.hpp"

#include <string>

namespace ramsey {

Answer small_k_solve(std::span<const Instance> instances) {
  for (const Instance &inst : instances) {
    if (inst.k == 0 || inst.k >= 3)
      throw std::invalid_argument("small_k_solve: k must be 1 or 2, got " +
                                  std::to_string(inst.k));
    if (inst.graph.size() >= inst.k)
      return Answer::yes;
  }
  return Answer::no;
}

Graph builtin_witness(unsigned ell) {
  Graph g;
  switch (ell) {
  case 2:
    g = paley_graph(5);
    break;
  case 3:
    g = paley_graph(17);
    break;
  default:
    throw HostSearchError("no built-in Ramsey witness for ell = " +
                          std::to_string(ell));
  }
  if (!verify_ramsey_witness(g, ell + 1))
    throw std::logic_error("built-in witness for ell = " + std::to_string(ell) +
                           " failed verification");
  return g;
}

HostGraph make_host(std::size_t t, const ComposeOptions &o) {
  HostGraph host;
  switch (o.strategy) {
  case HostStrategy::turan:
    host = turan_complement_host(t);
    break;
  case HostStrategy::witness: {
    const GapResult gap = smallest_gap(t, o.table);
    host = witness_host(t, gap.ell, builtin_witness(gap.ell), o.table);
    break;
  }
  case HostStrategy::random: {
    RandomHostOptions r;
    r.t = t;
    r.seed = o.seed;
    r.max_trials = o.random_trials;
    r.ell = o.random_ell;
    r.order = o.random_order;
    if (r.ell == 0 || r.order == 0) {
      const GapResult gap = smallest_gap(t, o.table);
      if (r.ell == 0)
        r.ell = gap.ell;
      if (r.order == 0)
        r.order = o.table.at(r.ell) + t;
    }
    host = random_host(r);
    break;
  }
  }
  if (auto check = validate_host(host); !check)
    throw HostSearchError(std::string(to_string(o.strategy)) +
                          " host failed validation: " + check.diagnostic);
  return host;
}

ComposeOutput compose(std::span<const Instance> instances,
                      const ComposeOptions &o) {
  if (instances.empty())
    throw std::invalid_argument("compose: no instances");
  const unsigned k = instances.front().k;
  for (std::size_t i = 0; i < instances.size(); ++i)
    if (instances[i].k != k)
      throw std::invalid_argument("compose: mixed k values (instance 0 has " +
                                  std::to_string(k) + ", instance " +
                                  std::to_string(i) + " has " +
                                  std::to_string(instances[i].k) + ")");
  if (k < 3)
    return small_k_solve(instances);

  for (std::size_t i = 0; i < instances.size(); ++i) {
    try {
      check_refinement(instances[i]);
    } catch (const IllegalInstanceError &e) {
      throw IllegalInstanceError("compose: instance " + std::to_string(i) +
                                 " is not a legal refinement instance: " +
                                 e.what());
    }
  }

  Composition out;
  out.host = make_host(instances.size(), o);
  out.embedding = embed(out.host, k, instances);
  out.strategy = o.strategy;
  out.seed = o.seed;
  return out;
}

} // namespace ramsey
