#include <doctest.h>

#include <random>

#include "mcolour/error.hpp"
#include "mcolour/generators.hpp"
#include "mcolour/lll.hpp"
#include "mcolour/verify.hpp"
#include "oracles.hpp"

using namespace mcolour;

namespace {

Hypergraph star(std::size_t leaves) {
  std::vector<std::vector<VertexId>> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Hypergraph(leaves + 1, std::move(edges));
}

}  // namespace

TEST_CASE("verify examples") {
  // Two disjoint copies of the degree-4 centre pattern (2,1,1).
  const auto s4 = star(4);
  auto report = verify(s4, 2, Colouring{{1, 1, 2, 3}, 3});
  // Leaves have degree 1 and bound 0, so they are violated; the centre is fine.
  for (const auto& v : report.violations) CHECK(v.vertex != 0);

  // Centre-only view: a 4-regular multigraph on 2 vertices.
  const Hypergraph twin(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  CHECK(verify(twin, 2, Colouring{{1, 1, 2, 3}, 3}).valid);

  const Hypergraph five(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
  report = verify(five, 2, Colouring{{1, 1, 1, 2, 3}, 3});
  CHECK_FALSE(report.valid);
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0] == Violation{0, 1, 3, 2});

  // d(v) = k everywhere: valid iff proper.
  const Hypergraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(verify(tri, 2, Colouring{{1, 2, 3}, 3}).valid);
  CHECK_FALSE(verify(tri, 2, Colouring{{1, 1, 3}, 3}).valid);

  CHECK_THROWS_AS(verify(tri, 2, Colouring{{1, 2}, 3}), PreconditionError);
  CHECK_THROWS_AS(verify(tri, 2, Colouring{{1, 2, 4}, 3}), PreconditionError);
  // Isolated vertices are trivially fine.
  CHECK(verify(Hypergraph(5, {{0, 1}, {0, 1}}), 2, Colouring{{1, 2}, 3}).valid);
}

TEST_CASE("verify is invariant under relabelling colours and agrees with direct counting") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned k = 2 + rng() % 2;
    const auto h = testing::random_hypergraph(rng, 2 + rng() % 6, 1 + rng() % 20, 2);
    const auto c = random_colouring(h, k, rng());
    const bool valid = verify(h, k, c).valid;
    CHECK(valid == testing::majority_ok(h, k, c.colours));
    Colouring rotated = c;
    for (auto& col : rotated.colours) col = col % c.palette + 1;
    CHECK(verify(h, k, rotated).valid == valid);
  }
}

TEST_CASE("brute force examples") {
  CHECK_FALSE(brute_force(Hypergraph(2, {{0, 1}}), 2, 3).has_value());
  const Hypergraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto found = brute_force(tri, 2, 3);
  REQUIRE(found.has_value());
  CHECK(found->colours == std::vector<ColourId>{1, 2, 3});
  CHECK_FALSE(brute_force(tri, 2, 2).has_value());
  CHECK(brute_force(Hypergraph(1, {}), 2, 3)->colours.empty());
  CHECK_THROWS_AS(brute_force(complete_graph(8), 2, 3), SearchTooLarge);
}

TEST_CASE("brute force returns the lexicographically first valid colouring") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned k = 2;
    const auto h = testing::random_hypergraph(rng, 2 + rng() % 3, 1 + rng() % 7, 2);
    const ColourId palette = 3;
    // Plain enumeration without pruning.
    std::optional<std::vector<ColourId>> first;
    std::vector<ColourId> cols(h.num_edges(), 1);
    while (true) {
      if (testing::majority_ok(h, k, cols)) {
        first = cols;
        break;
      }
      std::size_t i = cols.size();
      while (i > 0 && cols[i - 1] == palette) cols[--i] = 1;
      if (i == 0) break;
      ++cols[i - 1];
    }
    const auto got = brute_force(h, k, palette);
    CHECK(got.has_value() == first.has_value());
    if (got && first) CHECK(got->colours == *first);
  }
}

TEST_CASE("uniform generator") {
  CHECK(gen_uniform(GenSpec{Model::uniform, 5, 3, 0, 1}).num_edges() == 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GenSpec spec{Model::uniform, 12, 3, 4, seed};
    const auto h = gen_uniform(spec);
    CHECK(h.min_degree() >= 4);
    CHECK(h.rank() == 3);
    for (const auto& e : h.edges()) CHECK(e.size() == 3);
    CHECK(gen_uniform(spec) == h);
  }
  const auto full = gen_uniform(GenSpec{Model::uniform, 4, 4, 3, 2});
  CHECK(full.num_edges() == 3);
  for (VertexId v = 0; v < 4; ++v) CHECK(full.degree(v) == 3);
  CHECK_THROWS_AS(gen_uniform(GenSpec{Model::uniform, 3, 4, 1, 1}), PreconditionError);
}

TEST_CASE("linear and graph generators") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = gen_graph(GenSpec{Model::graph, 20, 7, 3, seed});
    CHECK(g.rank() == 2);
    CHECK(g.is_linear());
    CHECK(g.min_degree() >= 3);

    const auto h = gen_linear(GenSpec{Model::linear, 40, 3, 5, seed});
    CHECK(h.is_linear());
    CHECK(h.min_degree() >= 5);
    CHECK(h.rank() == 3);
    CHECK(gen_linear(GenSpec{Model::linear, 40, 3, 5, seed}) == h);
  }
  // 6 vertices cannot host a linear 3-uniform hypergraph with every degree 4.
  CHECK_THROWS_AS(gen_linear(GenSpec{Model::linear, 6, 3, 4, 1}), PreconditionError);
}

TEST_CASE("regular generator") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = gen_regular(GenSpec{Model::regular, 12, 3, 8, seed});
    for (VertexId v = 0; v < 12; ++v) CHECK(h.degree(v) == 8);
    for (const auto& e : h.edges()) CHECK(e.size() == 3);
  }
  CHECK_THROWS_AS(gen_regular(GenSpec{Model::regular, 5, 3, 1, 1}), PreconditionError);
  CHECK(parse_model("regular") == Model::regular);
  CHECK_THROWS_AS(parse_model("dense"), PreconditionError);
}
