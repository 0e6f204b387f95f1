#include "mcolour/lll.hpp"

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "mcolour/error.hpp"

namespace mcolour {

namespace {

void require_k(unsigned k) {
  if (k < 2) throw PreconditionError("k must be at least 2, got " + std::to_string(k));
}

// Unbiased draw from [1, n] by rejection on the raw 64-bit stream.
ColourId draw_colour(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<ColourId>(x % n + 1);
}

}  // namespace

ThresholdTerms threshold_terms(unsigned k, unsigned r, std::uint64_t delta) {
  const long double kk = k;
  const long double decay = std::exp(-static_cast<long double>(delta) / (3 * kk * kk * (kk + 1)));
  return {4 * (kk + 1) * decay,
          8 * (kk + 1) * (static_cast<long double>(r) - 1) * static_cast<long double>(delta) * decay};
}

bool inequalities_hold(unsigned k, unsigned r, std::uint64_t delta) {
  require_k(k);
  if (r < 2) throw PreconditionError("r must be at least 2, got " + std::to_string(r));
  if (delta < 1) throw PreconditionError("delta must be positive");
  const auto [lhs1, lhs2] = threshold_terms(k, r, delta);
  const long double ceiling = 1.0L - kThresholdMargin;
  return lhs1 <= ceiling && lhs2 <= ceiling;
}

std::uint64_t threshold_stationary_point(unsigned k) {
  const std::uint64_t kk = k;
  return 3 * kk * kk * (kk + 1);
}

std::uint64_t threshold(unsigned k, unsigned r) {
  // Past the stationary point both sides decrease in delta, so the first
  // passing value there is upward-closed. Below it lhs2 is still rising from
  // a value that already exceeds 1 at the stationary point (8(k+1)(r-1)*3k^2(k+1)/e),
  // so nothing below can belong to an upward-closed passing range.
  std::uint64_t delta = std::max<std::uint64_t>(1, threshold_stationary_point(k));
  while (!inequalities_hold(k, r, delta)) ++delta;
  return delta;
}

Colouring random_colouring(const Hypergraph& h, unsigned k, std::uint64_t seed) {
  require_k(k);
  std::mt19937_64 rng(seed);
  Colouring c;
  c.palette = k + 1;
  c.colours.reserve(h.num_edges());
  for (std::size_t e = 0; e < h.num_edges(); ++e) c.colours.push_back(draw_colour(rng, k + 1));
  return c;
}

std::vector<VertexId> bad_vertices(const Hypergraph& h, const Colouring& c, unsigned k) {
  require_k(k);
  if (c.palette != k + 1) {
    throw PreconditionError("palette " + std::to_string(c.palette) + " differs from k+1 = " +
                            std::to_string(k + 1));
  }
  validate_colouring(h, c);
  std::vector<VertexId> bad;
  std::vector<std::size_t> count(k + 2, 0);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    std::fill(count.begin(), count.end(), 0);
    const auto inc = h.incident(v);
    for (EdgeId e : inc) {
      // count * k > d(v) is "more than d(v)/k" in integers.
      if (++count[c.colours[e]] * k > inc.size()) {
        bad.push_back(v);
        break;
      }
    }
  }
  return bad;
}

std::uint64_t default_max_rounds(const Hypergraph& h) {
  return std::max<std::uint64_t>(1, 10'000 * static_cast<std::uint64_t>(h.num_edges()));
}

ResampleRun resample_colour(const Hypergraph& h, unsigned k, std::uint64_t seed,
                            std::uint64_t max_rounds) {
  require_k(k);
  ResampleRun run;
  run.seed = seed;
  run.max_rounds = max_rounds;

  const std::size_t palette = k + 1;
  std::mt19937_64 rng(seed);
  Colouring c;
  c.palette = static_cast<ColourId>(palette);
  c.colours.reserve(h.num_edges());
  for (std::size_t e = 0; e < h.num_edges(); ++e) c.colours.push_back(draw_colour(rng, palette));

  // counts[v * palette + (colour-1)]
  std::vector<std::size_t> counts(h.num_vertices() * palette, 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (VertexId v : h.edge(e)) ++counts[v * palette + c.colours[e] - 1];
  }
  const auto is_bad = [&](VertexId v) {
    const std::size_t d = h.degree(v);
    for (std::size_t col = 0; col < palette; ++col) {
      if (counts[v * palette + col] * k > d) return true;
    }
    return false;
  };
  std::set<VertexId> bad;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (is_bad(v)) bad.insert(v);
  }

  std::vector<VertexId> touched;
  while (!bad.empty() && run.rounds_used < max_rounds) {
    const VertexId u = *bad.begin();
    touched.clear();
    for (EdgeId e : h.incident(u)) {
      const ColourId fresh = draw_colour(rng, palette);
      for (VertexId v : h.edge(e)) {
        --counts[v * palette + c.colours[e] - 1];
        ++counts[v * palette + fresh - 1];
        touched.push_back(v);
      }
      c.colours[e] = fresh;
    }
    for (VertexId v : touched) {
      if (is_bad(v)) {
        bad.insert(v);
      } else {
        bad.erase(v);
      }
    }
    ++run.rounds_used;
  }
  if (bad.empty()) run.colouring = std::move(c);
  return run;
}

}  // namespace mcolour
