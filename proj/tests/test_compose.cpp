#include "doctest.h"

#include "oracle.hpp"
#include "ramsey/compose.hpp"
#include "ramsey/solver.hpp"

#include <string>

using namespace ramsey;

namespace {

Instance c5_instance() {
  return {Graph::cycle(5), 3, RefinementWitnesses{{0, 1}, {0, 2}}};
}

Instance triangle_plus_isolated() {
  GraphBuilder b(4);
  const Vertex tri[] = {0, 1, 2};
  b.make_clique(tri);
  return {std::move(b).build(), 3, RefinementWitnesses{{0, 1}, {0, 3}}};
}

const Composition &as_composition(const ComposeOutput &out) {
  REQUIRE(std::holds_alternative<Composition>(out));
  return std::get<Composition>(out);
}

} // namespace

TEST_SUITE("compose") {

TEST_CASE("small k is answered directly") {
  const Instance one[] = {{Graph(0), 1, std::nullopt}, {Graph(2), 1, std::nullopt}};
  CHECK(std::get<Answer>(compose(one, {})) == Answer::yes);
  const Instance none[] = {{Graph(0), 1, std::nullopt}};
  CHECK(std::get<Answer>(compose(none, {})) == Answer::no);
  const Instance two[] = {{Graph(1), 2, std::nullopt}, {Graph(1), 2, std::nullopt}};
  CHECK(std::get<Answer>(compose(two, {})) == Answer::no);
  const Instance pair[] = {{Graph(1), 2, std::nullopt}, {Graph(2), 2, std::nullopt}};
  CHECK(std::get<Answer>(compose(pair, {})) == Answer::yes);
  CHECK_THROWS_AS(small_k_solve(std::vector<Instance>{c5_instance()}),
                  std::invalid_argument);
}

TEST_CASE("four no-instances on the turan host") {
  const std::vector<Instance> inst(4, c5_instance());
  const ComposeOutput out = compose(inst, {});
  const Composition &c = as_composition(out);
  CHECK(c.embedding.ell == 2);
  CHECK(c.embedding.k_prime == 9);
  CHECK(c.embedding.g_prime.size() == 64);
  CHECK(max_homogeneous_size(c.embedding.g_prime) == 8);
  CHECK_FALSE(has_homogeneous(c.embedding.g_prime, 9));
}

TEST_CASE("one yes-instance decides the composition") {
  for (std::size_t pos = 0; pos < 4; ++pos) {
    std::vector<Instance> inst(4, c5_instance());
    inst[pos] = triangle_plus_isolated();
    const ComposeOutput out = compose(inst, {});
    const Composition &c = as_composition(out);
    CHECK(max_homogeneous_size(c.embedding.g_prime) >= 9);
  }
}

TEST_CASE("a single instance uses a one-vertex host") {
  const Instance inst[] = {c5_instance()};
  const ComposeOutput out = compose(inst, {});
  const Composition &c = as_composition(out);
  CHECK(c.embedding.ell == 1);
  CHECK(c.embedding.k_prime == 5);
  CHECK(c.host.h.size() == 1);
}

TEST_CASE("witness strategy parameters") {
  ComposeOptions o;
  o.strategy = HostStrategy::witness;
  for (std::size_t t = 1; t <= 11; ++t) {
    const std::vector<Instance> inst(t, c5_instance());
    const ComposeOutput out = compose(inst, o);
    const Composition &c = as_composition(out);
    const unsigned ell = t <= 3 ? 2 : 3;
    CHECK(c.embedding.ell == ell);
    CHECK(c.embedding.k_prime == ell * 4 + 1);
    CHECK(validate_host(c.host));
  }
  const std::vector<Instance> twelve(12, c5_instance());
  CHECK_THROWS_AS(compose(twelve, o), TableInsufficientError);
}

TEST_CASE("random strategy builds a valid host or throws") {
  ComposeOptions o;
  o.strategy = HostStrategy::random;
  o.seed = 5;
  const std::vector<Instance> inst(2, c5_instance());
  const ComposeOutput a = compose(inst, o);
  const ComposeOutput b = compose(inst, o);
  CHECK(validate_host(as_composition(a).host));
  CHECK(as_composition(a).embedding.g_prime == as_composition(b).embedding.g_prime);

  o.random_ell = 1;
  o.random_order = 3;
  o.random_trials = 50;
  CHECK_THROWS_AS(compose(inst, o), HostSearchError);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(compose(std::span<const Instance>{}, {}), std::invalid_argument);
  Instance k4 = c5_instance();
  k4.k = 4;
  k4.witnesses.reset();
  const Instance mixed[] = {c5_instance(), k4};
  CHECK_THROWS_AS(compose(mixed, {}), std::invalid_argument);

  // K3 has no independent pair, so it is not a refinement instance for k = 3
  const Instance illegal[] = {c5_instance(), {Graph::complete(3), 3, std::nullopt}};
  try {
    compose(illegal, {});
    FAIL("expected an illegal instance error");
  } catch (const IllegalInstanceError &e) {
    CHECK(std::string(e.what()).find("instance 1") != std::string::npos);
  }
}

TEST_CASE("compose is deterministic") {
  std::vector<Instance> inst;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Graph g = oracle::random_graph(6, s + 11);
    Instance candidate{g, 3, std::nullopt};
    if (is_legal_refinement(candidate))
      inst.push_back(candidate);
  }
  REQUIRE_FALSE(inst.empty());
  for (HostStrategy s : {HostStrategy::turan, HostStrategy::witness}) {
    ComposeOptions o;
    o.strategy = s;
    const ComposeOutput a = compose(inst, o);
    const ComposeOutput b = compose(inst, o);
    CHECK(as_composition(a).embedding.g_prime == as_composition(b).embedding.g_prime);
    CHECK(as_composition(a).embedding.assignment ==
          as_composition(b).embedding.assignment);
  }
}

TEST_CASE("builtin witnesses") {
  CHECK(builtin_witness(2) == Graph::cycle(5));
  CHECK(builtin_witness(3).size() == 17);
  CHECK_THROWS_AS(builtin_witness(4), HostSearchError);
}

} // TEST_SUITE
