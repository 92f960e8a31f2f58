#include "doctest.h"

#include "oracle.hpp"
#include "ramsey/dimacs.hpp"
#include "ramsey/graph_ops.hpp"

#include <vector>

using namespace ramsey;

namespace {

bool is_two_regular(const Graph &g) {
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) != 2)
      return false;
  return true;
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("builder rejects self-loops and out-of-range endpoints") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(b.add_edge(0, 3), std::out_of_range);
  b.add_edge(0, 1).add_edge(1, 0);
  CHECK(std::move(b).build().edge_count() == 1);
}

TEST_CASE("rows wider than one word") {
  GraphBuilder b(130);
  b.add_edge(0, 129).add_edge(64, 65);
  const Graph g = std::move(b).build();
  CHECK(g.words_per_row() == 3);
  CHECK(g.adjacent(129, 0));
  CHECK(g.adjacent(65, 64));
  CHECK_FALSE(g.adjacent(0, 64));
  CHECK(g.edges() == std::vector<Edge>{{0, 129}, {64, 65}});
}

TEST_CASE("complement") {
  CHECK(complement(Graph::edgeless(3)) == Graph::complete(3));
  CHECK(complement(Graph::complete(2)) == Graph::edgeless(2));

  const Graph c5c = complement(Graph::cycle(5));
  CHECK(c5c.edge_count() == 5);
  CHECK(is_two_regular(c5c));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = oracle::random_graph(1 + seed % 20, seed);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("join") {
  CHECK(join(Graph::complete(1), Graph::complete(1)) == Graph::complete(2));

  const Graph c4 = join(Graph::edgeless(2), Graph::edgeless(2));
  CHECK(c4.size() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(oracle::alpha(c4) == 2);
  CHECK(oracle::omega(c4) == 2);

  const Graph k2i3 = join(Graph::complete(2), Graph::edgeless(3));
  CHECK(oracle::omega(k2i3) == 3);
  CHECK(oracle::alpha(k2i3) == 3);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph a = oracle::random_graph(seed % 9, seed);
    const Graph b = oracle::random_graph(seed % 7 + 1, seed + 1000);
    const Graph j = join(a, b);
    CHECK(j.edge_count() ==
          a.edge_count() + b.edge_count() + a.size() * b.size());
    CHECK(oracle::omega(j) == oracle::omega(a) + oracle::omega(b));
    CHECK(oracle::alpha(j) == std::max(oracle::alpha(a), oracle::alpha(b)));
  }
}

TEST_CASE("disjoint union") {
  CHECK(disjoint_union(Graph::complete(1), Graph::complete(1)) ==
        Graph::edgeless(2));

  const Graph kk = disjoint_union(Graph::complete(3), Graph::complete(3));
  CHECK(oracle::omega(kk) == 3);
  CHECK(oracle::alpha(kk) == 2);

  const Graph p = Graph::petersen();
  CHECK(disjoint_union(Graph(), p) == p);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph a = oracle::random_graph(seed % 8 + 1, seed);
    const Graph b = oracle::random_graph(seed % 6 + 1, seed + 77);
    const Graph u = disjoint_union(a, b);
    CHECK(oracle::alpha(u) == oracle::alpha(a) + oracle::alpha(b));
    CHECK(oracle::omega(u) == std::max(oracle::omega(a), oracle::omega(b)));
  }
}

TEST_CASE("induced subgraph") {
  const Graph c5 = Graph::cycle(5);
  const Vertex first3[] = {0, 1, 2};
  CHECK(induced_subgraph(c5, first3) == Graph::path(3));

  const Vertex all[] = {0, 1, 2, 3, 4};
  CHECK(induced_subgraph(c5, all) == c5);

  const Vertex some3[] = {4, 1, 3};
  CHECK(induced_subgraph(Graph::complete(5), some3) == Graph::complete(3));

  // order of s is kept: 2-3 is an edge of C5 and lands on new 0-1
  const Vertex ordered[] = {2, 3, 0};
  const Graph sub = induced_subgraph(c5, ordered);
  CHECK(sub.adjacent(0, 1));
  CHECK_FALSE(sub.adjacent(0, 2));
  CHECK_FALSE(sub.adjacent(1, 2));

  const Vertex bad[] = {0, 5};
  CHECK_THROWS_AS(induced_subgraph(c5, bad), std::out_of_range);
  const Vertex repeated[] = {1, 1};
  CHECK_THROWS_AS(induced_subgraph(c5, repeated), std::invalid_argument);
}

TEST_CASE("connect by pattern") {
  const Graph k1 = Graph::complete(1);
  const Graph k2 = Graph::complete(2);
  {
    const Graph locals[] = {k1, k1};
    CHECK(connect_by_pattern(locals, Graph::edgeless(2)) == Graph::edgeless(2));
  }
  {
    const Graph locals[] = {k2, k2};
    const Graph g = connect_by_pattern(locals, k2);
    CHECK(g == Graph::complete(4));
    CHECK(oracle::omega(g) == 4);
  }
  {
    const Graph p = Graph::petersen();
    const Graph locals[] = {p};
    CHECK(connect_by_pattern(locals, k1) == p);
  }
  {
    const Graph locals[] = {k1};
    CHECK_THROWS_AS(connect_by_pattern(locals, k2), std::invalid_argument);
  }

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::vector<Graph> locals;
    for (std::size_t i = 0; i < 3; ++i)
      locals.push_back(oracle::random_graph(1 + (seed + i) % 5, seed * 3 + i));
    CHECK(connect_by_pattern(locals, Graph::complete(3)) ==
          join(join(locals[0], locals[1]), locals[2]));
    CHECK(connect_by_pattern(locals, Graph::edgeless(3)) ==
          disjoint_union(disjoint_union(locals[0], locals[1]), locals[2]));
  }
}

TEST_CASE("clique restriction is complete") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GraphBuilder b(10);
    const Vertex members[] = {1, 4, 6, 9};
    b.place(oracle::random_graph(10, seed), 0).make_clique(members);
    const Graph g = std::move(b).build();
    CHECK(induced_subgraph(g, members) == Graph::complete(4));
  }
}

} // TEST_SUITE

TEST_SUITE("dimacs") {

TEST_CASE("parse with comments and blank lines") {
  const Graph g = dimacs::read_string("c five-cycle\n"
                                      "p edge 5 5\n"
                                      "\n"
                                      "e 1 2\ne 2 3\nc mid comment\n"
                                      "e 3 4\ne 4 5\ne 5 1\n");
  CHECK(g == Graph::cycle(5));
}

TEST_CASE("canonical output is bit-exact") {
  const Graph g = dimacs::read_string("p edge 4 3\ne 4 1\ne 3 2\ne 2 1\n");
  CHECK(dimacs::to_string(g) == "p edge 4 3\ne 1 2\ne 1 4\ne 2 3\n");
  CHECK(dimacs::to_string(Graph(2)) == "p edge 2 0\n");
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(dimacs::read_string("p edge 3 2\ne 1 2\ne 2 1\n"),
                  dimacs::ParseError);
  CHECK_THROWS_AS(dimacs::read_string("p edge 3 1\ne 2 2\n"),
                  dimacs::ParseError);
  CHECK_THROWS_AS(dimacs::read_string("p edge 3 1\ne 1 4\n"),
                  dimacs::ParseError);
  CHECK_THROWS_AS(dimacs::read_string("p edge 3 1\ne 0 1\n"),
                  dimacs::ParseError);
  CHECK_THROWS_AS(dimacs::read_string("p edge 3 2\ne 1 2\n"),
                  dimacs::ParseError);
  CHECK_THROWS_AS(dimacs::read_string("e 1 2\n"), dimacs::ParseError);
  CHECK_THROWS_AS(dimacs::read_string("c nothing\n"), dimacs::ParseError);
  CHECK_THROWS_AS(dimacs::read_string("p col 3 0\n"), dimacs::ParseError);
  CHECK_THROWS_AS(dimacs::read_string("p edge 3 0\nx 1 2\n"),
                  dimacs::ParseError);
}

TEST_CASE("error names the line") {
  try {
    dimacs::read_string("p edge 3 2\ne 1 2\ne 1 2\n");
    FAIL("expected a parse error");
  } catch (const dimacs::ParseError &e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("write then read is the identity") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_graph(seed % 25, seed);
    const std::string text = dimacs::to_string(g);
    CHECK(dimacs::read_string(text) == g);
    CHECK(dimacs::to_string(dimacs::read_string(text)) == text);
  }
}

} // TEST_SUITE
