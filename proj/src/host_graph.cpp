#include "ramsey/host_graph.hpp"

#include "ramsey/graph_ops.hpp"
#include "ramsey/random.hpp"
#include "ramsey/solver.hpp"

#include <algorithm>

namespace ramsey {

std::string_view to_string(HostStrategy s) {
  switch (s) {
  case HostStrategy::turan:
    return "turan";
  case HostStrategy::witness:
    return "witness";
  case HostStrategy::random:
    return "random";
  }
  return "unknown";
}

HostStrategy host_strategy_from_string(std::string_view s) {
  if (s == "turan")
    return HostStrategy::turan;
  if (s == "witness")
    return HostStrategy::witness;
  if (s == "random")
    return HostStrategy::random;
  throw std::invalid_argument("unknown host strategy '" + std::string(s) +
                              "' (expected turan, witness or random)");
}

HostValidation validate_host(const HostGraph &host) {
  const Graph &h = host.h;
  const std::size_t n = h.size();
  auto fail = [](std::string why) { return HostValidation{false, std::move(why)}; };

  if (host.ell == 0)
    return fail("ell must be positive");

  std::vector<bool> covered(n, false);
  for (std::size_t i = 0; i < host.cover.size(); ++i) {
    const VertexSet &s = host.cover[i];
    const std::string name = "cover set " + std::to_string(i);
    if (s.size() != host.ell)
      return fail(name + " has " + std::to_string(s.size()) +
                  " vertices, expected ell = " + std::to_string(host.ell));
    for (Vertex v : s)
      if (v >= n)
        return fail(name + " names vertex " + std::to_string(v) +
                    " outside the host");
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return fail(name + " repeats a vertex");
    if (!is_clique(h, s) && !is_independent_set(h, s))
      return fail(name + " is neither a clique nor an independent set");
    for (Vertex v : s)
      covered[v] = true;
  }
  for (Vertex v = 0; v < n; ++v)
    if (!covered[v])
      return fail("vertex " + std::to_string(v) + " is not covered");

  if (auto c = find_clique(h, host.ell + 1))
    return fail("host has a clique of size " + std::to_string(host.ell + 1) +
                " (omega > ell)");
  if (auto i = find_independent_set(h, host.ell + 1))
    return fail("host has an independent set of size " +
                std::to_string(host.ell + 1) + " (alpha > ell)");
  return {};
}

HostGraph turan_complement_host(std::size_t t) {
  if (t == 0)
    throw std::invalid_argument("turan_complement_host: t must be positive");
  unsigned ell = 1;
  while (static_cast<std::size_t>(ell) * ell < t)
    ++ell;

  GraphBuilder b(static_cast<std::size_t>(ell) * ell);
  HostGraph host;
  host.ell = ell;
  for (unsigned g = 0; g < ell; ++g) {
    VertexSet group;
    for (unsigned j = 0; j < ell; ++j)
      group.push_back(g * ell + j);
    b.make_clique(group);
    host.cover.push_back(std::move(group));
  }
  if (ell > 1) {
    for (unsigned j = 0; j < ell; ++j) {
      VertexSet across;
      for (unsigned g = 0; g < ell; ++g)
        across.push_back(g * ell + j);
      host.cover.push_back(std::move(across));
    }
  }
  host.h = std::move(b).build();
  return host;
}

std::vector<VertexSet> prune_cover(std::vector<VertexSet> sets, std::size_t t,
                                   std::size_t n) {
  std::vector<std::size_t> count(n, 0);
  std::size_t covered = 0;
  for (const VertexSet &s : sets)
    for (Vertex v : s)
      if (count.at(v)++ == 0)
        ++covered;
  if (covered < t)
    throw std::invalid_argument("prune_cover: family covers " +
                                std::to_string(covered) + " < t = " +
                                std::to_string(t) + " vertices");

  std::vector<bool> keep(sets.size(), true);
  for (std::size_t i = sets.size(); i-- > 0;) {
    std::size_t lost = 0;
    for (Vertex v : sets[i])
      if (count[v] == 1)
        ++lost;
    if (covered - lost >= t) {
      keep[i] = false;
      covered -= lost;
      for (Vertex v : sets[i])
        --count[v];
    }
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (keep[i])
      out.push_back(std::move(sets[i]));
  return out;
}

namespace {

// Pulls size-ell homogeneous sets out of the uncovered vertices, lowest
// indices first, while at least `stop_below` vertices are uncovered.
std::vector<VertexSet> extract_cover(const Graph &h, unsigned ell,
                                     std::size_t stop_below, bool must_find) {
  VertexSet uncovered(h.size());
  for (Vertex v = 0; v < h.size(); ++v)
    uncovered[v] = v;

  std::vector<VertexSet> sets;
  while (uncovered.size() >= std::max<std::size_t>(stop_below, ell)) {
    const Graph sub = induced_subgraph(h, uncovered);
    auto w = has_homogeneous(sub, ell);
    if (!w) {
      if (must_find)
        throw std::logic_error("cover extraction stalled with " +
                               std::to_string(uncovered.size()) +
                               " uncovered vertices, at least R(ell) = " +
                               std::to_string(stop_below));
      break;
    }
    VertexSet picked;
    for (Vertex i : w->members)
      picked.push_back(uncovered[i]);
    std::vector<bool> drop(h.size(), false);
    for (Vertex v : picked)
      drop[v] = true;
    std::erase_if(uncovered, [&](Vertex v) { return drop[v]; });
    sets.push_back(std::move(picked));
  }
  return sets;
}

std::size_t union_size(const std::vector<VertexSet> &sets, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::size_t c = 0;
  for (const VertexSet &s : sets)
    for (Vertex v : s)
      if (!seen[v]) {
        seen[v] = true;
        ++c;
      }
  return c;
}

// Minimal pruning followed by restriction to the union of the kept sets.
HostGraph restrict_to_cover(const Graph &h, unsigned ell,
                            std::vector<VertexSet> sets, std::size_t t) {
  std::vector<VertexSet> kept = prune_cover(std::move(sets), t, h.size());

  std::vector<bool> in_union(h.size(), false);
  for (const VertexSet &s : kept)
    for (Vertex v : s)
      in_union[v] = true;
  VertexSet support;
  std::vector<Vertex> index(h.size(), 0);
  for (Vertex v = 0; v < h.size(); ++v)
    if (in_union[v]) {
      index[v] = static_cast<Vertex>(support.size());
      support.push_back(v);
    }

  HostGraph host;
  host.h = induced_subgraph(h, support);
  host.ell = ell;
  for (const VertexSet &s : kept) {
    VertexSet mapped;
    for (Vertex v : s)
      mapped.push_back(index[v]);
    std::sort(mapped.begin(), mapped.end());
    host.cover.push_back(std::move(mapped));
  }
  return host;
}

} // namespace

HostGraph witness_host(std::size_t t, unsigned ell, const Graph &witness,
                       const RamseyTable &table) {
  if (t == 0 || ell == 0)
    throw std::invalid_argument("witness_host: t and ell must be positive");
  if (!verify_ramsey_witness(witness, ell + 1))
    throw HostSearchError("witness_host: graph on " +
                          std::to_string(witness.size()) +
                          " vertices has a clique or independent set of size " +
                          std::to_string(ell + 1));
  const auto r_ell = table.value(ell);
  if (!r_ell)
    throw HostSearchError("witness_host: R(" + std::to_string(ell) +
                          ") not in table " + table.summary());
  const std::size_t order = *r_ell + t;
  if (witness.size() < order)
    throw HostSearchError("witness_host: witness has " +
                          std::to_string(witness.size()) +
                          " vertices, need R(ell) + t = " +
                          std::to_string(order));

  VertexSet prefix(order);
  for (Vertex v = 0; v < order; ++v)
    prefix[v] = v;
  const Graph h = induced_subgraph(witness, prefix);

  auto sets = extract_cover(h, ell, *r_ell, true);
  if (union_size(sets, h.size()) < t)
    throw std::logic_error("witness_host: cover reached fewer than t vertices");
  return restrict_to_cover(h, ell, std::move(sets), t);
}

HostGraph random_host(const RandomHostOptions &o) {
  if (o.t == 0 || o.ell == 0)
    throw std::invalid_argument("random_host: t and ell must be positive");
  if (o.order < o.t)
    throw std::invalid_argument("random_host: order T = " +
                                std::to_string(o.order) + " is below t = " +
                                std::to_string(o.t));
  for (std::size_t trial = 0; trial < o.max_trials; ++trial) {
    Rng rng(derive_seed(o.seed, trial));
    const Graph sample = random_graph(o.order, rng);
    if (!verify_ramsey_witness(sample, o.ell + 1))
      continue;
    auto sets = extract_cover(sample, o.ell, o.ell, false);
    if (union_size(sets, sample.size()) < o.t)
      continue;
    return restrict_to_cover(sample, o.ell, std::move(sets), o.t);
  }
  throw HostSearchError("random_host: no sample on " + std::to_string(o.order) +
                        " vertices with alpha, omega <= " +
                        std::to_string(o.ell) + " covering " +
                        std::to_string(o.t) + " vertices in " +
                        std::to_string(o.max_trials) + " trials");
}

} // namespace ramsey
