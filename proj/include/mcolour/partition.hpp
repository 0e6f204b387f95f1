#pragma once

#include <span>
#include <vector>

#include "mcolour/hypergraph.hpp"
#include "mcolour/rational.hpp"

namespace mcolour {

/// Target weight for extracting colour class i (1-based) from what remains
/// after classes 1..i-1:
///   alpha_i = (delta/k - r) / (delta - (i-1)(delta/k - 2r)).
/// Requires 1 <= i <= k and delta >= 2 r k^2.
Rational alpha(unsigned i, std::size_t delta, unsigned k, std::size_t r);

/// alpha_1..alpha_k.
std::vector<Rational> alpha_schedule(std::size_t delta, unsigned k, std::size_t r);

struct PartitionRound {
  unsigned round = 0;
  Rational alpha;
  std::size_t class_size = 0;
};

struct PartitionResult {
  Colouring colouring;  // palette k+1
  std::vector<PartitionRound> rounds;
  std::size_t delta = 0;
  std::size_t rank = 0;
};

/// Degree-bound audit after extracting class i. `class_degree[v]` and
/// `remaining_degree[v]` are degrees in the new class and in the residual.
/// With B = d(v)/delta, checks
///   class_degree[v]     <= B delta / k
///   remaining_degree[v] <= B (delta - i (delta/k - 2r))
/// exactly, and throws InvariantBreach naming (v, i, observed, bound) on failure.
void check_class_bounds(const Hypergraph& h, std::size_t delta, unsigned k, std::size_t r,
                        unsigned i, std::span<const std::size_t> class_degree,
                        std::span<const std::size_t> remaining_degree);

/// 1/k-majority (k+1)-edge-colouring of a hypergraph with minimum degree at
/// least 2 r k^2, by k rounds of rounding the constant weighting alpha_i on the
/// remaining edges. Colour i collects the edges rounded to 1 in round i; the
/// final residual gets colour k+1.
PartitionResult colour_partition(const Hypergraph& h, unsigned k);

}  // namespace mcolour
