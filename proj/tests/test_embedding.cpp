#include "doctest.h"

#include "oracle.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/graph_ops.hpp"
#include "ramsey/solver.hpp"

using namespace ramsey;

namespace {

Instance c5_instance() {
  return {Graph::cycle(5), 3, RefinementWitnesses{{0, 1}, {0, 2}}};
}

// K3 plus an isolated vertex: omega = 3, so a yes-instance for k = 3.
Instance triangle_plus_isolated() {
  GraphBuilder b(4);
  const Vertex tri[] = {0, 1, 2};
  b.make_clique(tri);
  return {std::move(b).build(), 3, RefinementWitnesses{{0, 1}, {0, 3}}};
}

HostGraph single_vertex_host() { return {Graph(1), 1, {{0}}}; }

HostGraph two_disjoint_edges() {
  GraphBuilder b(4);
  b.add_edge(0, 1).add_edge(2, 3);
  return {std::move(b).build(), 2, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}};
}

} // namespace

TEST_SUITE("constructions") {

TEST_CASE("dummy graph") {
  const Graph d2 = dummy_graph(2);
  CHECK(d2.size() == 1);
  const Graph d3 = dummy_graph(3);
  // K1 joined to I2 is a path with vertex 0 in the middle
  CHECK(d3.edge_count() == 2);
  CHECK(d3.degree(0) == 2);
  CHECK(oracle::alpha(d3) == 2);
  CHECK(oracle::omega(d3) == 2);
  const Graph d5 = dummy_graph(5);
  CHECK(d5.size() == 7);
  CHECK(oracle::alpha(d5) == 4);
  CHECK(oracle::omega(d5) == 4);
  for (unsigned c = 2; c <= 8; ++c) {
    const Graph d = dummy_graph(c);
    CHECK(d.size() == 2 * c - 3);
    CHECK(oracle::alpha(d) == c - 1);
    CHECK(oracle::omega(d) == c - 1);
  }
  CHECK_THROWS_AS(dummy_graph(1), std::invalid_argument);
}

TEST_CASE("local graph of a legal no-instance") {
  const Graph h = local_graph(c5_instance());
  CHECK(h.size() == 16);
  CHECK(oracle::alpha(h) == 4);
  CHECK(oracle::omega(h) == 4);
}

TEST_CASE("local graph of a yes-instance") {
  const Graph h = local_graph(triangle_plus_isolated());
  CHECK(oracle::omega(h) >= 5);
  CHECK(oracle::alpha(h) >= 5);
}

TEST_CASE("local graph order") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (unsigned k = 3; k <= 5; ++k) {
      Instance inst{Graph(n), k, std::nullopt};
      CHECK(local_graph(inst).size() == local_graph_order(n, k));
      CHECK(local_graph_order(n, k) == 2 * (n + 2 * k - 3));
    }
  CHECK_THROWS_AS(local_graph({Graph(3), 2, std::nullopt}),
                  std::invalid_argument);
}

TEST_CASE("local graph layout: G, dummy, complement, dummy") {
  const Instance inst = triangle_plus_isolated();
  const Graph h = local_graph(inst);
  const std::size_t n = inst.graph.size();
  const std::size_t d = 2 * inst.k - 3;
  VertexSet first, third;
  for (Vertex v = 0; v < n; ++v) {
    first.push_back(v);
    third.push_back(static_cast<Vertex>(n + d + v));
  }
  CHECK(induced_subgraph(h, first) == inst.graph);
  CHECK(induced_subgraph(h, third) == complement(inst.graph));
  // halves are not connected
  CHECK_FALSE(h.adjacent(0, static_cast<Vertex>(n + d)));
}

TEST_CASE("local graph alpha/omega law on random refinement instances") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; checked < 40 && seed < 2000; ++seed) {
    const Graph g = oracle::random_graph(4 + seed % 3, seed);
    const std::size_t a = oracle::alpha(g), w = oracle::omega(g);
    for (unsigned k = 3; k <= 4; ++k) {
      if (a < k - 1 || w < k - 1)
        continue;
      const Graph h = local_graph({g, k, std::nullopt});
      const bool yes = std::max(a, w) >= k;
      if (yes) {
        CHECK(oracle::alpha(h) >= 2 * k - 1);
        CHECK(oracle::omega(h) >= 2 * k - 1);
      } else {
        CHECK(oracle::alpha(h) == 2 * k - 2);
        CHECK(oracle::omega(h) == 2 * k - 2);
      }
      // the block for complement(G) is the block for G with halves swapped
      const Graph hc = local_graph({complement(g), k, std::nullopt});
      const std::size_t half = h.size() / 2;
      VertexSet swapped;
      for (std::size_t v = 0; v < h.size(); ++v)
        swapped.push_back(static_cast<Vertex>((v + half) % h.size()));
      CHECK(induced_subgraph(h, swapped) == hc);
      ++checked;
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("embed into a single vertex") {
  const HostGraph host = single_vertex_host();
  {
    const Instance inst[] = {c5_instance()};
    const EmbedResult e = embed(host, 3, inst);
    CHECK(e.g_prime == local_graph(inst[0]));
    CHECK(e.k_prime == 5);
    CHECK(max_homogeneous_size(e.g_prime) == 4);
    CHECK_FALSE(has_homogeneous(e.g_prime, e.k_prime));
  }
  {
    const Instance inst[] = {triangle_plus_isolated()};
    const EmbedResult e = embed(host, 3, inst);
    CHECK(e.k_prime == 5);
    CHECK(max_homogeneous_size(e.g_prime) >= 5);
  }
}

TEST_CASE("embed into two disjoint edges") {
  const HostGraph host = two_disjoint_edges();
  const std::vector<Instance> inst(4, c5_instance());
  const EmbedResult e = embed(host, 3, inst);
  CHECK(e.g_prime.size() == 64);
  CHECK(e.k_prime == 9);
  CHECK(e.ell == 2);
  CHECK(max_homogeneous_size(e.g_prime) == 8);

  std::vector<Instance> one_yes = inst;
  one_yes[2] = triangle_plus_isolated();
  const EmbedResult y = embed(host, 3, one_yes);
  CHECK(y.g_prime.size() == 16 * 3 + 14);
  CHECK(has_homogeneous(y.g_prime, y.k_prime));
}

TEST_CASE("round-robin assignment and block ranges") {
  const HostGraph host = two_disjoint_edges();
  const Instance inst[] = {c5_instance(), triangle_plus_isolated(),
                           c5_instance()};
  const EmbedResult e = embed(host, 3, inst);
  CHECK(e.assignment == std::vector<std::size_t>{0, 1, 2, 0});
  REQUIRE(e.block_ranges.size() == 4);
  CHECK(e.block_ranges[0] == BlockRange{0, 16});
  CHECK(e.block_ranges[1] == BlockRange{16, 30});
  CHECK(e.block_ranges[2] == BlockRange{30, 46});
  CHECK(e.block_ranges[3] == BlockRange{46, 62});
  CHECK(e.g_prime.size() == 62);
  // blocks 0,1 are joined (host edge 0-1), blocks 0,2 are not
  CHECK(e.g_prime.adjacent(0, 16));
  CHECK_FALSE(e.g_prime.adjacent(0, 30));
  const auto r = e.block_ranges[3];
  VertexSet block;
  for (std::size_t v = r.begin; v < r.end; ++v)
    block.push_back(static_cast<Vertex>(v));
  CHECK(induced_subgraph(e.g_prime, block) == local_graph(inst[0]));
}

TEST_CASE("k prime arithmetic") {
  for (unsigned ell = 1; ell <= 3; ++ell)
    for (unsigned k = 3; k <= 6; ++k) {
      HostGraph host{Graph(1), ell, {}};
      const Instance inst[] = {{Graph(2 * k), k, std::nullopt}};
      CHECK(embed(host, k, inst).k_prime == ell * (2 * k - 2) + 1);
    }
}

TEST_CASE("embed errors") {
  const HostGraph host = single_vertex_host();
  CHECK_THROWS_AS(embed(host, 3, std::span<const Instance>{}),
                  std::invalid_argument);
  const Instance k2[] = {{Graph(3), 2, std::nullopt}};
  CHECK_THROWS_AS(embed(host, 2, k2), std::invalid_argument);
  const Instance two[] = {c5_instance(), c5_instance()};
  CHECK_THROWS_AS(embed(host, 3, two), std::invalid_argument);
  const Instance mixed[] = {c5_instance()};
  CHECK_THROWS_AS(embed(host, 4, mixed), std::invalid_argument);
}

} // TEST_SUITE
