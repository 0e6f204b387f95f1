#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "mcolour/error.hpp"
#include "mcolour/hypergraph.hpp"
#include "mcolour/io.hpp"
#include "oracles.hpp"

using namespace mcolour;

namespace {

Hypergraph triangle() { return Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

std::vector<std::vector<VertexId>> sorted_edges(const Hypergraph& h) {
  auto edges = h.edges();
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

TEST_CASE("parse the documented HGR samples") {
  const auto h = parse_hypergraph("3 4\n1 2 3\n2 3 4\n1 4\n");
  CHECK(h.num_vertices() == 4);
  CHECK(h.num_edges() == 3);
  CHECK(h.rank() == 3);
  CHECK(h.edge(2)[0] == 0);
  CHECK(h.edge(2)[1] == 3);

  const auto single = parse_hypergraph("1 2\n1 2\n");
  CHECK(single.num_vertices() == 2);
  CHECK(single.num_edges() == 1);
  CHECK(single.rank() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_hypergraph("2 3\n1 1 2\n3 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_hypergraph("2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("1 2\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("2 2\n1 2\n\n2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("2 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("1 2\n1 2\n2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("1 2\n1 x\n"), ParseError);
}

TEST_CASE("comments, CRLF and trailing whitespace are tolerated") {
  const auto h = parse_hypergraph("% header comment\r\n2 3  \r\n1 2\r\n% mid\r\n2 3 \t\r\n\r\n");
  CHECK(h.num_edges() == 2);
  CHECK(h.degree(1) == 2);
}

TEST_CASE("degree counts edge occurrences") {
  const auto t = triangle();
  CHECK(t.degree(0) == 2);
  const Hypergraph empty(4, {});
  for (VertexId v = 0; v < 4; ++v) CHECK(empty.degree(v) == 0);
  const Hypergraph multi(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(multi.degree(1) == 3);
  CHECK_THROWS_AS(t.degree(3), PreconditionError);
}

TEST_CASE("min_degree, rank and linearity") {
  const auto t = triangle();
  CHECK(t.min_degree() == 2);
  CHECK(t.rank() == 2);
  CHECK(t.is_linear());

  const Hypergraph overlap(4, {{0, 1, 2}, {0, 1, 3}});
  CHECK_FALSE(overlap.is_linear());
  CHECK(overlap.linearity_witness() == std::make_pair(EdgeId{0}, EdgeId{1}));

  CHECK(Hypergraph(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}).is_linear());
  CHECK_FALSE(Hypergraph(2, {{0, 1}, {0, 1}}).is_linear());
  CHECK(Hypergraph(1, {{0}, {0}}).is_linear());

  CHECK_THROWS_AS(Hypergraph(0, {}).min_degree(), PreconditionError);
}

TEST_CASE("constructor rejects malformed edges") {
  CHECK_THROWS_AS(Hypergraph(3, {{}}), PreconditionError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Hypergraph(3, {{1, 1}}), PreconditionError);
}

TEST_CASE("random instances: parse/serialize round trip, degree bound, order-free linearity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const std::size_t r = 1 + rng() % std::min<std::size_t>(n, 4);
    const auto h = testing::random_hypergraph(rng, n, 1 + rng() % 15, r);

    std::ostringstream out;
    write_hypergraph(out, h);
    const auto back = parse_hypergraph(out.str());
    CHECK(back.num_vertices() == h.num_vertices());
    CHECK(sorted_edges(back) == sorted_edges(h));

    CHECK(h.rank() >= 1);
    std::size_t pins = 0;
    for (const auto& e : h.edges()) pins += e.size();
    CHECK(h.min_degree() * n <= pins);

    auto shuffled = h.edges();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(Hypergraph(n, shuffled).is_linear() == h.is_linear());
  }
}

TEST_CASE("colouring and weights files") {
  std::istringstream col("# palette 5\n1\n3\n2\n");
  const auto c = parse_colouring(col);
  CHECK(c.palette == 5);
  CHECK(c.colours == std::vector<ColourId>{1, 3, 2});

  std::istringstream bare("2\n1\n");
  CHECK(parse_colouring(bare).palette == 2);

  std::istringstream w("1/2\n0.375\n1\n0\n4/6\n");
  const auto weights = parse_weights(w);
  REQUIRE(weights.size() == 5);
  CHECK(weights[0] == Rational(1, 2));
  CHECK(weights[1] == Rational(3, 8));
  CHECK(weights[4] == Rational(2, 3));
  std::ostringstream out;
  write_weights(out, weights);
  CHECK(out.str() == "1/2\n3/8\n1\n0\n2/3\n");

  std::istringstream bad("1/0\n");
  CHECK_THROWS_AS(parse_weights(bad), ParseError);
}

TEST_CASE("colouring and weighting validation") {
  const auto t = triangle();
  CHECK_NOTHROW(validate_colouring(t, Colouring{{1, 2, 3}, 3}));
  CHECK_THROWS_AS(validate_colouring(t, Colouring{{1, 2}, 3}), PreconditionError);
  CHECK_THROWS_AS(validate_colouring(t, Colouring{{1, 2, 4}, 3}), PreconditionError);
  CHECK_THROWS_AS(validate_weighting(t, Weighting{0, 1, Rational(3, 2)}), PreconditionError);
}
