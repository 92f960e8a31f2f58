#include "ramsey/embedding.hpp"

#include "ramsey/graph_ops.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

Graph dummy_graph(unsigned c) {
  if (c < 2)
    throw std::invalid_argument("dummy_graph: c must be at least 2, got " +
                                std::to_string(c));
  return join(Graph::complete(c - 2), Graph::edgeless(c - 1));
}

Graph local_graph(const Instance &inst) {
  if (inst.k < 3)
    throw std::invalid_argument("local_graph: k must be at least 3, got " +
                                std::to_string(inst.k));
  const Graph dummy = dummy_graph(inst.k);
  return disjoint_union(join(inst.graph, dummy),
                        join(complement(inst.graph), dummy));
}

std::size_t local_graph_order(std::size_t n, unsigned k) {
  return 2 * (n + 2 * static_cast<std::size_t>(k) - 3);
}

EmbedResult embed(const HostGraph &host, unsigned k,
                  std::span<const Instance> instances) {
  const std::size_t t = instances.size();
  const std::size_t slots = host.h.size();
  if (t == 0)
    throw std::invalid_argument("embed: no instances");
  if (k < 3)
    throw std::invalid_argument("embed: k must be at least 3, got " +
                                std::to_string(k));
  if (host.ell == 0)
    throw std::invalid_argument("embed: host ell must be positive");
  if (t > slots)
    throw std::invalid_argument("embed: " + std::to_string(t) +
                                " instances exceed " + std::to_string(slots) +
                                " host vertices");
  for (std::size_t i = 0; i < t; ++i)
    if (instances[i].k != k)
      throw std::invalid_argument("embed: instance " + std::to_string(i) +
                                  " has k = " + std::to_string(instances[i].k) +
                                  ", expected " + std::to_string(k));

  std::vector<Graph> distinct;
  distinct.reserve(t);
  for (const Instance &inst : instances)
    distinct.push_back(local_graph(inst));

  EmbedResult out;
  out.ell = host.ell;
  out.k_prime = host.ell * (2 * k - 2) + 1;
  std::vector<Graph> locals;
  locals.reserve(slots);
  std::size_t offset = 0;
  for (std::size_t v = 0; v < slots; ++v) {
    const std::size_t i = v % t;
    out.assignment.push_back(i);
    locals.push_back(distinct[i]);
    out.block_ranges.push_back({offset, offset + distinct[i].size()});
    offset += distinct[i].size();
  }
  out.g_prime = connect_by_pattern(locals, host.h);
  return out;
}

} // namespace ramsey
