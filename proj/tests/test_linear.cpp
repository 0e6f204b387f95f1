#include <doctest.h>

#include <numeric>

#include "mcolour/error.hpp"
#include "mcolour/generators.hpp"
#include "mcolour/linear.hpp"
#include "mcolour/verify.hpp"
#include "oracles.hpp"

using namespace mcolour;

namespace {

Hypergraph fano() {
  return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

std::vector<EdgeId> iota_order(std::size_t n) {
  std::vector<EdgeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

TEST_CASE("split_degrees") {
  CHECK(split_degrees(7, 3) == SplitDegrees{1, 2});
  for (unsigned k = 2; k <= 6; ++k) CHECK(split_degrees(k * k - k, k) == SplitDegrees{0, k - 1});
  CHECK(split_degrees(8, 2) == SplitDegrees{0, 4});
  CHECK_THROWS_AS(split_degrees(5, 3), PreconditionError);
  CHECK_THROWS_AS(split_degrees(5, 1), PreconditionError);
  // Brute force: the unique (m, t) with d = m + t k, 0 <= m < k, and t >= m.
  for (unsigned k = 2; k <= 5; ++k) {
    for (std::size_t d = k * k - k; d < 60; ++d) {
      const auto s = split_degrees(d, k);
      CHECK(s.m + s.t * k == d);
      CHECK(s.m < k);
      CHECK(s.t >= s.m);
    }
  }
}

TEST_CASE("Fano plane with k=2 splits into itself") {
  const auto h = fano();
  REQUIRE(h.is_linear());
  const auto [split, map] = split_hypergraph(h, 2);
  CHECK(split.num_vertices() == 7);
  for (const auto& v : map.vertices) {
    CHECK(v.m == 1);
    CHECK(v.t == 1);
  }
  CHECK(split.edges() == h.edges());
}

TEST_CASE("cycle graph with k=2 is not split") {
  const Hypergraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto [split, map] = split_hypergraph(c5, 2);
  for (const auto& v : map.vertices) CHECK(v.t == 1);
  CHECK(split.num_vertices() == 5);
  CHECK_THROWS_AS(split_hypergraph(c5, 3), PreconditionError);
}

TEST_CASE("non-linear input is rejected naming the edge pair") {
  const Hypergraph h(4, {{0, 1, 2}, {0, 1, 3}, {2, 3}});
  try {
    split_hypergraph(h, 2);
    FAIL("expected rejection");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("edges 1 and 2") != std::string::npos);
  }
}

TEST_CASE("line graph shapes") {
  const LineGraph tri(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(tri.num_nodes() == 3);
  for (EdgeId e = 0; e < 3; ++e) CHECK(tri.degree(e) == 2);

  const LineGraph single(Hypergraph(3, {{0, 1, 2}}));
  CHECK(single.num_nodes() == 1);
  CHECK(single.degree(0) == 0);

  const LineGraph star(Hypergraph(4, {{0, 1}, {0, 2}, {0, 3}}));
  for (EdgeId e = 0; e < 3; ++e) CHECK(star.degree(e) == 2);
}

TEST_CASE("greedy colouring") {
  const LineGraph tri(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(greedy_colour(tri, iota_order(3)) == std::vector<ColourId>{1, 2, 3});

  const LineGraph isolated(Hypergraph(6, {{0, 1}, {2, 3}, {4, 5}}));
  CHECK(greedy_colour(isolated, iota_order(3)) == std::vector<ColourId>{1, 1, 1});

  // Path a - b - c as the line graph of edges a={0,1}, b={1,2}, c={2,3}.
  const LineGraph path(Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}}));
  const std::vector<EdgeId> order{0, 2, 1};
  CHECK(greedy_colour(path, order) == std::vector<ColourId>{1, 2, 1});
}

TEST_CASE("colour_linear on random linear instances") {
  for (unsigned k = 2; k <= 3; ++k) {
    for (std::size_t r = 2; r <= 3; ++r) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const GenSpec spec{Model::linear, 40, r, k * k - k + seed % 3, seed};
        const auto h = gen_linear(spec);
        const auto result = colour_linear(h, k);
        CHECK(result.colouring.palette == k * r + 1);
        CHECK(result.colours_used <= k * r + 1);
        CHECK(result.split_max_degree <= k + 1);
        CHECK(result.line_graph_max_degree <= k * r);
        CHECK(verify(h, k, result.colouring).valid);

        // Per-vertex conservation and the t_u bound.
        const auto [split, map] = split_hypergraph(h, k);
        CHECK(split.is_linear());
        CHECK(split.rank() == h.rank());
        std::size_t total_t = 0;
        for (VertexId u = 0; u < h.num_vertices(); ++u) {
          const auto& s = map.vertices[u];
          total_t += s.t;
          std::size_t sum = 0;
          std::size_t big = 0;
          for (const auto& block : s.blocks) {
            sum += block.size();
            big += block.size() == k + 1;
          }
          CHECK(sum == h.degree(u));
          CHECK(big == s.m);
          std::vector<std::size_t> count(k * r + 2, 0);
          for (EdgeId e : h.incident(u)) {
            CHECK(++count[result.colouring.colours[e]] <= s.t);
          }
        }
        CHECK(total_t == split.num_vertices());
      }
    }
  }
}

TEST_CASE("low degree forces a proper edge colouring") {
  // Every degree is 2 or 3 < 2k for k = 2, so t_u = 1 everywhere.
  const auto h = fano();
  const auto result = colour_linear(h, 2);
  for (EdgeId a = 0; a < h.num_edges(); ++a) {
    for (EdgeId b = a + 1; b < h.num_edges(); ++b) {
      CHECK(result.colouring.colours[a] != result.colouring.colours[b]);  // Fano lines all meet
    }
  }
}

TEST_CASE("linear preconditions") {
  CHECK_THROWS_AS(colour_linear(Hypergraph(2, {{0, 1}}), 2), PreconditionError);
  CHECK_THROWS_AS(colour_linear(fano(), 1), PreconditionError);
  CHECK_THROWS_AS(colour_linear(Hypergraph(2, {{0, 1}, {0, 1}}), 2), PreconditionError);
}
