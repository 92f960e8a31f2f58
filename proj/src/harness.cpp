#include "ramsey/harness.hpp"

#include "ramsey/random.hpp"
#include "ramsey/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace ramsey {

std::size_t default_instance_order(unsigned k) {
  return std::max<std::size_t>(5, 2 * static_cast<std::size_t>(k) - 2);
}

namespace {

bool has_k_set(const Graph &g, unsigned k) {
  if (g.size() <= brute_force_vertex_guard)
    return brute_force_homogeneous(g, k).has_value();
  return has_homogeneous(g, k).has_value();
}

} // namespace

Instance gen_refinement_instance(std::size_t n, unsigned k, Answer target,
                                 std::uint64_t seed, std::size_t budget) {
  if (k < 3)
    throw std::invalid_argument("gen: k must be at least 3, got " +
                                std::to_string(k));
  if (n < 2 * static_cast<std::size_t>(k) - 3)
    throw std::invalid_argument(
        "gen: no graph on " + std::to_string(n) +
        " vertices has both a clique and an independent set of size k-1 = " +
        std::to_string(k - 1));
  if (target == Answer::yes && n < 2 * static_cast<std::size_t>(k) - 2)
    throw std::invalid_argument("gen: a yes-instance with k = " +
                                std::to_string(k) + " needs at least " +
                                std::to_string(2 * k - 2) + " vertices");
  if (target == Answer::no) {
    if (auto r = RamseyTable::builtin().value(k); r && n >= *r)
      throw std::invalid_argument("gen: every graph on " + std::to_string(n) +
                                  " >= R(" + std::to_string(k) + ") = " +
                                  std::to_string(*r) +
                                  " vertices has a homogeneous k-set");
  }

  const std::size_t block = k - 1;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    GraphBuilder b(n);
    {
      const Graph base = random_graph(n, rng);
      b.place(base, 0);
    }
    VertexSet perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    rng.shuffle(perm.begin(), perm.end());

    if (target == Answer::yes) {
      std::span<const Vertex> planted(perm.data(), k);
      if (rng.coin())
        b.make_clique(planted);
      else
        b.make_independent(planted);
    } else if (attempt >= budget / 2 && n >= 2 * block) {
      b.make_clique(std::span<const Vertex>(perm.data(), block));
      b.make_independent(std::span<const Vertex>(perm.data() + block, block));
    }

    Graph g = std::move(b).build();
    auto witnesses = find_refinement_witnesses(g, k);
    if (!witnesses)
      continue;
    const bool yes = has_k_set(g, k);
    if (yes != (target == Answer::yes))
      continue;
    return {std::move(g), k, std::move(witnesses)};
  }
  throw std::runtime_error("gen: retry budget of " + std::to_string(budget) +
                           " attempts exhausted for n = " + std::to_string(n) +
                           ", k = " + std::to_string(k) + ", target " +
                           std::string(to_string(target)));
}

std::string_view to_string(Stratum s) {
  switch (s) {
  case Stratum::all_no:
    return "all-no";
  case Stratum::one_yes:
    return "one-yes";
  case Stratum::mixed:
    return "mixed";
  }
  return "unknown";
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const TrialRecord &r : records) {
    nlohmann::json j = {{"trial", r.trial},
                        {"t", r.t},
                        {"k", r.k},
                        {"strategy", std::string(to_string(r.strategy))},
                        {"seed", r.seed},
                        {"stratum", std::string(to_string(r.stratum))},
                        {"input_or", std::string(to_string(r.input_or))},
                        {"composed", std::string(to_string(r.composed))},
                        {"k_prime", r.k_prime},
                        {"ell", r.ell},
                        {"vertices", r.vertices},
                        {"agree", r.agree}};
    if (r.max_homogeneous)
      j["max_homogeneous"] = *r.max_homogeneous;
    if (with_timing)
      j["wall_ms"] = r.wall_ms;
    rows.push_back(std::move(j));
  }
  return {{"records", std::move(rows)},
          {"passed", passed},
          {"failed", failed},
          {"total", records.size()}};
}

VerificationReport verify_composition(const VerifyConfig &c) {
  if (c.k < 3)
    throw std::invalid_argument("verify: k must be at least 3");
  if (c.t == 0 || c.trials == 0)
    throw std::invalid_argument("verify: t and trials must be positive");
  const std::size_t n = c.instance_order ? c.instance_order
                                         : default_instance_order(c.k);

  VerificationReport report;
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const auto started = std::chrono::steady_clock::now();
    TrialRecord r;
    r.trial = trial;
    r.t = c.t;
    r.k = c.k;
    r.strategy = c.strategy;
    r.seed = derive_seed(c.seed, trial);
    r.stratum = static_cast<Stratum>(trial % 3);

    Rng rng(r.seed);
    std::vector<Answer> targets(c.t, Answer::no);
    if (r.stratum == Stratum::one_yes)
      targets[rng.below(c.t)] = Answer::yes;
    else if (r.stratum == Stratum::mixed)
      for (Answer &a : targets)
        a = rng.coin() ? Answer::yes : Answer::no;

    std::vector<Instance> instances;
    r.input_or = Answer::no;
    for (std::size_t j = 0; j < c.t; ++j) {
      instances.push_back(
          gen_refinement_instance(n, c.k, targets[j], derive_seed(r.seed, j + 1)));
      if (brute_force_homogeneous(instances.back().graph, c.k))
        r.input_or = Answer::yes;
    }

    ComposeOptions options;
    options.strategy = c.strategy;
    options.seed = r.seed;
    const auto out = compose(instances, options);
    const auto &composed = std::get<Composition>(out);
    const EmbedResult &e = composed.embedding;
    r.k_prime = e.k_prime;
    r.ell = e.ell;
    r.vertices = e.g_prime.size();
    if (r.vertices > c.vertex_cap)
      throw FeasibilityError("verify: composed graph has " +
                             std::to_string(r.vertices) +
                             " vertices, above the cap of " +
                             std::to_string(c.vertex_cap));

    r.composed = has_homogeneous(e.g_prime, e.k_prime) ? Answer::yes
                                                        : Answer::no;
    r.agree = r.composed == r.input_or;
    if (r.stratum == Stratum::all_no) {
      r.max_homogeneous = max_homogeneous_size(e.g_prime);
      r.agree = r.agree && *r.max_homogeneous == e.k_prime - 1;
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - started)
                    .count();
    (r.agree ? report.passed : report.failed) += 1;
    report.records.push_back(std::move(r));
  }
  return report;
}

nlohmann::json SharpnessReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const SharpnessRecord &r : records)
    rows.push_back({{"seed_index", r.seed_index},
                    {"ell", r.ell},
                    {"k_prime", r.k_prime},
                    {"vertices", r.vertices},
                    {"max_all_no", r.max_all_no},
                    {"flip_reaches_k_prime", r.flip_reaches_k_prime},
                    {"pass", r.pass}});
  return {{"records", std::move(rows)}, {"passed", passed}, {"failed", failed}};
}

SharpnessReport check_sharpness(const SharpnessConfig &c) {
  if (c.k < 3 || c.t == 0)
    throw std::invalid_argument("sharpness: need k >= 3 and t >= 1");
  const std::size_t n = c.instance_order ? c.instance_order
                                         : default_instance_order(c.k);
  ComposeOptions options;
  options.strategy = c.strategy;

  SharpnessReport report;
  for (std::size_t s = 0; s < c.seeds; ++s) {
    const std::uint64_t seed = derive_seed(c.seed, s);
    options.seed = seed;
    std::vector<Instance> instances;
    for (std::size_t j = 0; j < c.t; ++j)
      instances.push_back(
          gen_refinement_instance(n, c.k, Answer::no, derive_seed(seed, j + 1)));

    SharpnessRecord r;
    r.seed_index = s;
    {
      const ComposeOutput out = compose(instances, options);
      const EmbedResult &e = std::get<Composition>(out).embedding;
      r.ell = e.ell;
      r.k_prime = e.k_prime;
      r.vertices = e.g_prime.size();
      r.max_all_no = max_homogeneous_size(e.g_prime);
    }
    bool pass = r.max_all_no == r.k_prime - 1;
    for (std::size_t i = 0; i < c.t; ++i) {
      std::vector<Instance> flipped = instances;
      flipped[i] = gen_refinement_instance(n, c.k, Answer::yes,
                                           derive_seed(seed, c.t + 1 + i));
      const ComposeOutput out = compose(flipped, options);
      const EmbedResult &e = std::get<Composition>(out).embedding;
      const bool reached = has_homogeneous(e.g_prime, e.k_prime).has_value();
      r.flip_reaches_k_prime.push_back(reached);
      pass = pass && reached;
    }
    r.pass = pass;
    (pass ? report.passed : report.failed) += 1;
    report.records.push_back(std::move(r));
  }
  return report;
}

std::vector<BlowupRow> blowup_report(std::span<const std::size_t> t_values,
                                     std::span<const unsigned> k_values,
                                     std::span<const HostStrategy> strategies,
                                     std::size_t instance_order,
                                     std::uint64_t seed) {
  std::vector<BlowupRow> rows;
  for (std::size_t t : t_values)
    for (unsigned k : k_values)
      for (HostStrategy s : strategies) {
        BlowupRow row;
        row.t = t;
        row.k = k;
        row.strategy = s;
        ComposeOptions options;
        options.strategy = s;
        options.seed = seed;
        try {
          const HostGraph host = make_host(t, options);
          const std::size_t n =
              instance_order ? instance_order : default_instance_order(k);
          row.ell = host.ell;
          row.k_prime = host.ell * (2 * k - 2) + 1;
          row.vertices = host.h.size() * local_graph_order(n, k);
        } catch (const TableInsufficientError &) {
        } catch (const HostSearchError &) {
        }
        rows.push_back(row);
      }
  return rows;
}

std::string blowup_csv(std::span<const BlowupRow> rows) {
  std::ostringstream out;
  out << "t,k,strategy,ell,k_prime,k_prime_over_k,vertices\n";
  for (const BlowupRow &r : rows) {
    out << r.t << ',' << r.k << ',' << to_string(r.strategy) << ',';
    if (r.ell) {
      char ratio[32];
      std::snprintf(ratio, sizeof ratio, "%.4f",
                    static_cast<double>(*r.k_prime) / r.k);
      out << *r.ell << ',' << *r.k_prime << ',' << ratio << ',' << *r.vertices;
    } else {
      out << "NA,NA,NA,NA";
    }
    out << '\n';
  }
  return out.str();
}

} // namespace ramsey
