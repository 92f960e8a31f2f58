#include "ramsey/ramsey_numbers.hpp"

#include "ramsey/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ramsey {

std::string_view to_string(Provenance p) {
  switch (p) {
  case Provenance::paper:
    return "paper";
  case Provenance::computed:
    return "computed";
  case Provenance::external:
    return "external";
  }
  return "unknown";
}

Provenance provenance_from_string(std::string_view s) {
  if (s == "paper")
    return Provenance::paper;
  if (s == "computed")
    return Provenance::computed;
  if (s == "external")
    return Provenance::external;
  throw std::invalid_argument("unknown provenance '" + std::string(s) + "'");
}

RamseyTable RamseyTable::builtin() {
  return RamseyTable({{1, {1, Provenance::paper}},
                      {2, {2, Provenance::paper}},
                      {3, {6, Provenance::paper}},
                      {4, {18, Provenance::external}}});
}

RamseyTable::RamseyTable(std::map<unsigned, RamseyEntry> entries)
    : entries_(std::move(entries)) {
  if (!entries_.contains(1) || entries_.at(1).value != 1)
    throw std::invalid_argument("Ramsey table must contain R(1) = 1");
  if (!entries_.contains(2) || entries_.at(2).value != 2)
    throw std::invalid_argument("Ramsey table must contain R(2) = 2");
  const RamseyEntry *prev = nullptr;
  for (const auto &[k, e] : entries_) {
    if (k == 0)
      throw std::invalid_argument("Ramsey table key must be positive");
    if (prev && e.value <= prev->value)
      throw std::invalid_argument("Ramsey table must be strictly increasing "
                                  "(R(" +
                                  std::to_string(k) + ") = " +
                                  std::to_string(e.value) + ")");
    prev = &e;
  }
}

std::optional<std::uint64_t> RamseyTable::value(unsigned k) const {
  auto it = entries_.find(k);
  if (it == entries_.end())
    return std::nullopt;
  return it->second.value;
}

std::uint64_t RamseyTable::at(unsigned k) const {
  if (auto v = value(k))
    return *v;
  throw std::out_of_range("R(" + std::to_string(k) + ") not in table " +
                          summary());
}

std::string RamseyTable::summary() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto &[k, e] : entries_) {
    out << (first ? "" : ",") << e.value;
    first = false;
  }
  out << '}';
  return out.str();
}

nlohmann::json RamseyTable::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto &[k, e] : entries_)
    j[std::to_string(k)] = {{"value", e.value},
                            {"provenance", std::string(to_string(e.provenance))}};
  return j;
}

RamseyTable RamseyTable::from_json(const nlohmann::json &j) {
  std::map<unsigned, RamseyEntry> entries;
  for (const auto &[key, item] : j.items()) {
    const auto k = static_cast<unsigned>(std::stoul(key));
    entries[k] = {item.at("value").get<std::uint64_t>(),
                  provenance_from_string(item.at("provenance").get<std::string>())};
  }
  return RamseyTable(std::move(entries));
}

bool verify_ramsey_witness(const Graph &g, std::size_t k) {
  return !has_homogeneous(g, k).has_value();
}

Graph graph_from_pair_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U)
        b.add_edge(i, j);
  return std::move(b).build();
}

unsigned compute_ramsey_exhaustive(unsigned k, unsigned n_cap) {
  if (k == 0)
    throw std::invalid_argument("compute_ramsey_exhaustive: k must be positive");
  for (unsigned n = 1; n <= n_cap; ++n) {
    if (n < k)
      continue; // the edgeless graph on n < k vertices is a witness
    if (n > exhaustive_order_limit)
      throw ScaleGuardError("compute_ramsey_exhaustive: order " +
                            std::to_string(n) + " needs 2^" +
                            std::to_string(n * (n - 1) / 2) +
                            " graphs, above the enumeration limit of order " +
                            std::to_string(exhaustive_order_limit));
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    bool all_forced = true;
    for (std::uint64_t mask = 0; mask < masks && all_forced; ++mask)
      all_forced = has_homogeneous(graph_from_pair_mask(n, mask), k).has_value();
    if (all_forced)
      return n;
  }
  throw std::runtime_error("compute_ramsey_exhaustive: R(" + std::to_string(k) +
                           ") exceeds cap " + std::to_string(n_cap));
}

std::uint64_t erdos_lower_bound(unsigned N) {
  if (N == 0 || N > 127)
    throw std::invalid_argument("erdos_lower_bound: N must be in 1..127");
  const unsigned e = N - 1;
  if (e % 2 == 0)
    return std::uint64_t{1} << (e / 2);
  // ceil(sqrt(2^e)) for odd e
  using u128 = unsigned __int128;
  const u128 target = u128{1} << e;
  auto r = static_cast<std::uint64_t>(
      std::sqrt(static_cast<long double>(std::ldexp(1.0L, static_cast<int>(e)))));
  while (u128{r} * r < target)
    ++r;
  while (r > 0 && u128{r - 1} * (r - 1) >= target)
    --r;
  return r;
}

SpencerEstimate spencer_lower_estimate(unsigned k) {
  if (k == 0)
    throw std::invalid_argument("spencer_lower_estimate: k must be positive");
  const double v = k * std::pow(2.0, k / 2.0) /
                   (std::numbers::e * std::numbers::sqrt2);
  return {v, false};
}

unsigned log_gap_bound(std::uint64_t t) {
  const double lg = std::max(1.0, std::log2(static_cast<double>(std::max<std::uint64_t>(t, 1))));
  return static_cast<unsigned>(std::ceil(8.0 * lg));
}

GapResult smallest_gap(std::uint64_t t, const RamseyTable &table) {
  if (t == 0)
    throw std::invalid_argument("smallest_gap: t must be positive");
  std::uint64_t reach = 0;
  for (const auto &[ell, entry] : table.entries()) {
    auto next = table.value(ell + 1);
    if (!next)
      continue;
    if (*next > entry.value + t)
      return {ell, entry.value + t};
    reach = std::max(reach, *next - entry.value - 1);
  }
  throw TableInsufficientError(
      t, "table-insufficient: no ell with R(ell+1) > R(ell) + " +
             std::to_string(t) + " in exact table " + table.summary() +
             "; it supports t <= " + std::to_string(reach) +
             " only, use the turan strategy for larger t");
}

GapResult lemma5_ell(std::uint64_t t, const RamseyTable &table) {
  if (t <= 3)
    throw std::invalid_argument("lemma5_ell: t must exceed 3");
  GapResult gap = smallest_gap(t, table);
  if (gap.ell > log_gap_bound(t))
    throw std::logic_error("lemma5_ell: gap at ell = " +
                           std::to_string(gap.ell) + " exceeds ceil(8 log t) = " +
                           std::to_string(log_gap_bound(t)));
  return gap;
}

Graph paley_graph(unsigned q) {
  bool prime = q >= 2;
  for (unsigned d = 2; prime && d * d <= q; ++d)
    prime = q % d != 0;
  if (!prime || q % 4 != 1)
    throw std::invalid_argument("paley_graph: q = " + std::to_string(q) +
                                " is not a prime congruent to 1 mod 4");
  std::vector<bool> square(q, false);
  for (std::uint64_t x = 1; x < q; ++x)
    square[(x * x) % q] = true;
  GraphBuilder b(q);
  for (Vertex i = 0; i < q; ++i)
    for (Vertex j = i + 1; j < q; ++j)
      if (square[j - i])
        b.add_edge(i, j);
  return std::move(b).build();
}

} // namespace ramsey
