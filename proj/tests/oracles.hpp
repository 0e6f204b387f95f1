#pragma once

// Test-only reference routines. They deliberately share no code path with the
// library beyond the Hypergraph container.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "mcolour/hypergraph.hpp"
#include "mcolour/rational.hpp"

namespace mcolour::testing {

/// Strict two-sided discrepancy test at every vertex:
///   sum z - r < sum x < sum z + r.
inline bool within_rank(const Hypergraph& h, const std::vector<Rational>& z,
                        const std::vector<Rational>& x) {
  const Rational r(static_cast<unsigned long>(h.rank()));
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    Rational sz = 0;
    Rational sx = 0;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      for (VertexId u : h.edge(e)) {
        if (u == v) {
          sz += z[e];
          sx += x[e];
        }
      }
    }
    if (!(sz - r < sx && sx < sz + r)) return false;
  }
  return true;
}

/// Every 0/1 vector satisfying the strict discrepancy bound, as bitmasks.
inline std::vector<std::uint32_t> feasible_roundings(const Hypergraph& h, const std::vector<Rational>& z) {
  std::vector<std::uint32_t> out;
  const std::size_t m = h.num_edges();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Rational> x(m);
    for (std::size_t e = 0; e < m; ++e) x[e] = (mask >> e) & 1u;
    if (within_rank(h, z, x)) out.push_back(mask);
  }
  return out;
}

inline std::uint32_t as_mask(const std::vector<Rational>& x) {
  std::uint32_t mask = 0;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] == 1) mask |= 1u << e;
  }
  return mask;
}

/// Majority condition by direct per-(vertex, colour) counting over all edges.
inline bool majority_ok(const Hypergraph& h, unsigned k, const std::vector<ColourId>& colours) {
  ColourId top = 0;
  for (auto c : colours) top = std::max(top, c);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    std::size_t d = 0;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      for (VertexId u : h.edge(e)) d += (u == v);
    }
    for (ColourId c = 1; c <= top; ++c) {
      std::size_t count = 0;
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (colours[e] != c) continue;
        for (VertexId u : h.edge(e)) count += (u == v);
      }
      if (count > d / k) return false;
    }
  }
  return true;
}

/// Random hypergraph with edges of size 1..r (at least one edge of size r).
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t r) {
  if (r < 1 || r > n) throw std::invalid_argument("random_hypergraph needs 1 <= r <= n");
  std::vector<std::vector<VertexId>> edges;
  std::vector<VertexId> pool(n);
  for (VertexId v = 0; v < n; ++v) pool[v] = v;
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t size = e == 0 ? r : 1 + rng() % r;
    std::shuffle(pool.begin(), pool.end(), rng);
    edges.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  }
  return Hypergraph(n, std::move(edges));
}

/// Random rationals in [0,1] with small denominators, plus a share of exact 0s and 1s.
inline std::vector<Rational> random_weights(std::mt19937_64& rng, std::size_t m) {
  std::vector<Rational> z(m);
  for (auto& w : z) {
    const auto kind = rng() % 10;
    if (kind == 0) {
      w = 0;
    } else if (kind == 1) {
      w = 1;
    } else {
      const unsigned long den = 1 + rng() % 12;
      w = Rational(rng() % (den + 1), den);
      w.canonicalize();
    }
  }
  return z;
}

}  // namespace mcolour::testing
