#include "ramsey/compose.hpp"
#include "ramsey/dimacs.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/graph_ops.hpp"
#include "ramsey/harness.hpp"
#include "ramsey/host_graph.hpp"
#include "ramsey/ramsey_numbers.hpp"
#include "ramsey/reductions.hpp"
#include "ramsey/solver.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace ramsey;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// JSON vertex lists are 1-indexed like DIMACS.
json to_one_based(const VertexSet &s) {
  json a = json::array();
  for (Vertex v : s)
    a.push_back(v + 1);
  return a;
}

VertexSet from_one_based(const json &a, std::size_t n, const std::string &what) {
  VertexSet out;
  for (const json &x : a) {
    const auto v = x.get<std::int64_t>();
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw std::invalid_argument(what + ": vertex " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    out.push_back(static_cast<Vertex>(v - 1));
  }
  return out;
}

json read_json(const fs::path &p) {
  std::ifstream in(p);
  if (!in)
    throw std::runtime_error("cannot open " + p.string());
  return json::parse(in);
}

void write_text(const fs::path &p, const std::string &text) {
  std::ofstream out(p);
  if (!out)
    throw std::runtime_error("cannot write " + p.string());
  out << text;
}

// Graph to <out> (or stdout) and sidecar to <out>.json (or stderr).
void emit(const std::string &out, const Graph &g, const json &sidecar) {
  if (out.empty()) {
    dimacs::write(std::cout, g);
    std::cerr << sidecar.dump(2) << '\n';
    return;
  }
  dimacs::write_file(out, g);
  write_text(out + ".json", sidecar.dump(2) + "\n");
}

Graph graph_from_json(const json &spec, const fs::path &base) {
  if (spec.is_string()) {
    fs::path p = spec.get<std::string>();
    if (p.is_relative())
      p = base / p;
    return dimacs::read_file(p);
  }
  const auto n = spec.at("n").get<std::size_t>();
  GraphBuilder b(n);
  for (const json &e : spec.at("edges")) {
    const VertexSet uv = from_one_based(e, n, "edge");
    if (uv.size() != 2)
      throw std::invalid_argument("edge entries need two endpoints");
    b.add_edge(uv[0], uv[1]);
  }
  return std::move(b).build();
}

std::vector<Instance> read_bundle(const fs::path &path) {
  const json j = read_json(path);
  const auto k = j.at("k").get<unsigned>();
  std::vector<Instance> out;
  for (const json &item : j.at("instances")) {
    Instance inst{graph_from_json(item.at("graph"), path.parent_path()), k,
                  std::nullopt};
    if (item.contains("clique_witness") && item.contains("indep_witness"))
      inst.witnesses = RefinementWitnesses{
          from_one_based(item["clique_witness"], inst.graph.size(), "clique_witness"),
          from_one_based(item["indep_witness"], inst.graph.size(), "indep_witness")};
    out.push_back(std::move(inst));
  }
  return out;
}

json cover_json(const std::vector<VertexSet> &cover) {
  json a = json::array();
  for (const auto &s : cover)
    a.push_back(to_one_based(s));
  return a;
}

// Some ell-clique or ell-independent set through each vertex, found with
// the exact solver on the neighbourhood or non-neighbourhood.
std::vector<VertexSet> derive_cover(const Graph &h, unsigned ell) {
  std::vector<VertexSet> cover;
  std::vector<bool> covered(h.size(), false);
  for (Vertex v = 0; v < h.size(); ++v) {
    if (covered[v])
      continue;
    VertexSet nbr, non;
    for (Vertex u = 0; u < h.size(); ++u)
      if (u != v)
        (h.adjacent(u, v) ? nbr : non).push_back(u);
    std::optional<VertexSet> found;
    if (ell == 1) {
      found = VertexSet{v};
    } else if (auto c = find_clique(induced_subgraph(h, nbr), ell - 1)) {
      found = VertexSet{v};
      for (Vertex x : c->members)
        found->push_back(nbr[x]);
    } else if (auto i = find_independent_set(induced_subgraph(h, non), ell - 1)) {
      found = VertexSet{v};
      for (Vertex x : i->members)
        found->push_back(non[x]);
    }
    if (!found)
      throw HostSearchError("vertex " + std::to_string(v + 1) +
                            " lies in no homogeneous set of size " +
                            std::to_string(ell));
    std::sort(found->begin(), found->end());
    for (Vertex x : *found)
      covered[x] = true;
    cover.push_back(std::move(*found));
  }
  return cover;
}

template <class T> std::vector<T> parse_list(const std::string &text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(static_cast<T>(std::stoull(item)));
  return out;
}

std::vector<HostStrategy> parse_strategies(const std::string &text) {
  std::vector<HostStrategy> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(host_strategy_from_string(item));
  return out;
}

const std::vector<std::string> strategy_names = {"turan", "witness", "random"};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Ramsey composition toolkit"};
  app.require_subcommand(1);

  // solve
  auto *solve = app.add_subcommand("solve", "Decide RAMSEY(k) on a DIMACS graph");
  std::string graph_path;
  unsigned k = 0;
  std::string mode = "either";
  solve->add_option("--graph", graph_path, "DIMACS graph")->required();
  solve->add_option("--k", k, "Target size")->required()->check(CLI::PositiveNumber);
  solve->add_option("--mode", mode, "clique, indep or either")
      ->check(CLI::IsMember({"clique", "indep", "either"}));

  // ramsey
  auto *ramsey_cmd = app.add_subcommand("ramsey", "Ramsey numbers and witnesses");
  std::optional<unsigned> compute_k;
  std::size_t cap = exhaustive_order_limit;
  std::string witness_path;
  std::optional<std::uint64_t> gap_t;
  bool show_table = false;
  ramsey_cmd->add_option("--compute", compute_k, "Compute R(k) exhaustively");
  ramsey_cmd->add_option("--cap", cap, "Largest order to try");
  ramsey_cmd->add_option("--witness", witness_path, "Check a DIMACS witness for R(k)");
  ramsey_cmd->add_option("--k", k, "k for --witness");
  ramsey_cmd->add_option("--gap", gap_t, "Smallest table gap for t instances");
  ramsey_cmd->add_flag("--table", show_table, "Print the built-in table as JSON");

  // embed
  auto *embed_cmd = app.add_subcommand("embed", "Embed a bundle into a host");
  std::string bundle_path, host_path, out_path;
  unsigned ell = 0;
  embed_cmd->add_option("--bundle", bundle_path, "Bundle JSON")->required();
  embed_cmd->add_option("--host", host_path, "Host DIMACS")->required();
  embed_cmd->add_option("--ell", ell, "Host level")->required()->check(CLI::PositiveNumber);
  embed_cmd->add_option("--out", out_path, "Output DIMACS (sidecar at <out>.json)");

  // reduce
  auto *reduce = app.add_subcommand("reduce", "Apply a reduction");
  std::string from;
  reduce->add_option("--from", from, "clique or ramsey")
      ->required()
      ->check(CLI::IsMember({"clique", "ramsey"}));
  reduce->add_option("--graph", graph_path, "DIMACS graph")->required();
  reduce->add_option("--k", k, "Parameter")->required();
  reduce->add_option("--out", out_path, "Output DIMACS (sidecar at <out>.json)");

  // host
  auto *host_cmd = app.add_subcommand("host", "Build a host graph");
  std::size_t t = 0;
  std::string strategy = "turan";
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::size_t order = 0;
  host_cmd->add_option("--t", t, "Number of instances")->required()->check(CLI::PositiveNumber);
  host_cmd->add_option("--strategy", strategy)->check(CLI::IsMember(strategy_names));
  host_cmd->add_option("--ell", ell, "Level (random only)");
  host_cmd->add_option("--order", order, "Sampled order T (random only)");
  host_cmd->add_option("--trials", trials, "Sampling budget (random only)");
  host_cmd->add_option("--seed", seed);
  host_cmd->add_option("--out", out_path, "Output DIMACS (sidecar at <out>.json)");

  // compose
  auto *compose_cmd = app.add_subcommand("compose", "Compose a bundle of instances");
  compose_cmd->add_option("--bundle", bundle_path, "Bundle JSON")->required();
  compose_cmd->add_option("--strategy", strategy)->check(CLI::IsMember(strategy_names));
  compose_cmd->add_option("--seed", seed);
  compose_cmd->add_option("--out", out_path, "Output DIMACS (sidecar at <out>.json)");

  // verify
  auto *verify = app.add_subcommand("verify", "Check composition against brute force");
  std::string report_path;
  std::size_t vertex_cap = 80;
  std::size_t instance_order = 0;
  verify->add_option("--t", t)->required()->check(CLI::PositiveNumber);
  verify->add_option("--k", k)->required();
  verify->add_option("--strategy", strategy)->check(CLI::IsMember(strategy_names));
  verify->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);
  verify->add_option("--n", instance_order, "Vertices per instance");
  verify->add_option("--cap", vertex_cap, "Largest composed graph to decide");
  verify->add_option("--report", report_path, "Write the JSON report here");

  // gen
  auto *gen = app.add_subcommand("gen", "Generate a refinement instance");
  std::size_t n = 0;
  std::string target;
  gen->add_option("--n", n)->required();
  gen->add_option("--k", k)->required();
  gen->add_option("--target", target)->required()->check(CLI::IsMember({"yes", "no"}));
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path, "Output DIMACS (sidecar at <out>.json)");

  // report
  auto *report = app.add_subcommand("report", "Parameter blowup table");
  bool blowup = false;
  std::string t_list = "1,2,4,8,11", k_list = "3,4", strategy_list = "turan,witness";
  report->add_flag("--blowup", blowup)->required();
  report->add_option("--t", t_list);
  report->add_option("--k", k_list);
  report->add_option("--strategies", strategy_list);
  report->add_option("--n", instance_order, "Vertices per instance");
  report->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const Graph g = dimacs::read_file(graph_path);
      std::optional<HomogeneousWitness> w;
      if (mode == "clique")
        w = find_clique(g, k);
      else if (mode == "indep")
        w = find_independent_set(g, k);
      else
        w = has_homogeneous(g, k);
      if (!w) {
        std::cout << "no\n";
        return 0;
      }
      std::cout << "yes " << to_string(w->kind) << '\n';
      for (std::size_t i = 0; i < w->members.size(); ++i)
        std::cout << (i ? " " : "") << w->members[i] + 1;
      std::cout << '\n';
    } else if (*ramsey_cmd) {
      const RamseyTable table = RamseyTable::builtin();
      if (compute_k) {
        std::cout << "R(" << *compute_k << ") = "
                  << compute_ramsey_exhaustive(*compute_k, cap) << '\n';
      } else if (!witness_path.empty()) {
        if (k == 0)
          throw std::invalid_argument("--witness needs --k");
        const Graph g = dimacs::read_file(witness_path);
        const bool ok = verify_ramsey_witness(g, k);
        std::cout << (ok ? "witness" : "not a witness") << ": R(" << k
                  << ") " << (ok ? "> " : "? ") << g.size() << '\n';
        return ok ? 0 : 1;
      } else if (gap_t) {
        const GapResult gap = smallest_gap(*gap_t, table);
        std::cout << json{{"t", *gap_t}, {"ell", gap.ell},
                          {"host_order", gap.host_order},
                          {"log_bound", log_gap_bound(*gap_t)}}
                         .dump()
                  << '\n';
      } else {
        std::cout << table.to_json().dump(2) << '\n';
      }
    } else if (*embed_cmd) {
      const std::vector<Instance> instances = read_bundle(bundle_path);
      HostGraph host;
      host.h = dimacs::read_file(host_path);
      host.ell = ell;
      host.cover = derive_cover(host.h, ell);
      if (auto check = validate_host(host); !check)
        throw HostSearchError("host rejected: " + check.diagnostic);
      const unsigned bundle_k = instances.empty() ? 0 : instances.front().k;
      const EmbedResult e = embed(host, bundle_k, instances);
      json ranges = json::array();
      for (const BlockRange &r : e.block_ranges)
        ranges.push_back({r.begin + 1, r.end});
      emit(out_path, e.g_prime,
           {{"k_prime", e.k_prime}, {"assignment", e.assignment},
            {"block_ranges", ranges}});
    } else if (*reduce) {
      const Graph g = dimacs::read_file(graph_path);
      const Instance out =
          from == "clique" ? clique_to_ramsey(g, k) : ramsey_to_refinement(g, k);
      json side = {{"k", out.k}, {"witnesses", nullptr}};
      if (out.witnesses)
        side["witnesses"] = {{"clique", to_one_based(out.witnesses->clique)},
                             {"independent_set",
                              to_one_based(out.witnesses->independent_set)}};
      emit(out_path, out.graph, side);
    } else if (*host_cmd) {
      ComposeOptions o;
      o.strategy = host_strategy_from_string(strategy);
      o.seed = seed;
      o.random_ell = ell;
      o.random_order = order;
      o.random_trials = trials;
      const HostGraph host = make_host(t, o);
      emit(out_path, host.h,
           {{"ell", host.ell}, {"cover", cover_json(host.cover)},
            {"strategy", strategy}});
    } else if (*compose_cmd) {
      ComposeOptions o;
      o.strategy = host_strategy_from_string(strategy);
      o.seed = seed;
      const std::vector<Instance> instances = read_bundle(bundle_path);
      const ComposeOutput out = compose(instances, o);
      if (const auto *a = std::get_if<Answer>(&out)) {
        std::cout << to_string(*a) << '\n';
        return 0;
      }
      const Composition &c = std::get<Composition>(out);
      emit(out_path, c.embedding.g_prime,
           {{"k_prime", c.embedding.k_prime}, {"ell", c.embedding.ell},
            {"strategy", strategy}, {"assignment", c.embedding.assignment}});
    } else if (*verify) {
      VerifyConfig c;
      c.t = t;
      c.k = k;
      c.strategy = host_strategy_from_string(strategy);
      c.trials = trials;
      c.seed = seed;
      c.instance_order = instance_order;
      c.vertex_cap = vertex_cap;
      const VerificationReport r = verify_composition(c);
      if (!report_path.empty())
        write_text(report_path, r.to_json().dump(2) + "\n");
      std::cout << r.passed << "/" << r.records.size() << " agree\n";
      return r.ok() ? 0 : 1;
    } else if (*gen) {
      const Instance inst = gen_refinement_instance(
          n, k, target == "yes" ? Answer::yes : Answer::no, seed);
      emit(out_path, inst.graph,
           {{"k", inst.k},
            {"target", target},
            {"clique_witness", to_one_based(inst.witnesses->clique)},
            {"indep_witness", to_one_based(inst.witnesses->independent_set)}});
    } else if (*report) {
      const auto ts = parse_list<std::size_t>(t_list);
      const auto ks = parse_list<unsigned>(k_list);
      const auto ss = parse_strategies(strategy_list);
      std::cout << blowup_csv(blowup_report(ts, ks, ss, instance_order, seed));
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
