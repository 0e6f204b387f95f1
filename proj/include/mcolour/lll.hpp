#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcolour/hypergraph.hpp"

namespace mcolour {

/// Left-hand sides of the two sufficient conditions for a random
/// (k+1)-colouring to be 1/k-majority with positive probability:
///   lhs1 = 4(k+1) exp(-delta / (3k^2(k+1)))
///   lhs2 = 8(k+1)(r-1) delta exp(-delta / (3k^2(k+1)))
/// Both conditions read lhs <= 1.
struct ThresholdTerms {
  long double lhs1 = 0;
  long double lhs2 = 0;
};

ThresholdTerms threshold_terms(unsigned k, unsigned r, std::uint64_t delta);

/// Relative slack below 1 that both sides must clear: lhs <= 1 - 2^-30.
inline constexpr long double kThresholdMargin = 1.0L / (1ULL << 30);

/// Both inequalities hold with the safety margin. Requires k, r >= 2, delta >= 1.
bool inequalities_hold(unsigned k, unsigned r, std::uint64_t delta);

/// delta at which lhs2 stops increasing: 3k^2(k+1).
std::uint64_t threshold_stationary_point(unsigned k);

/// Least delta* such that the inequalities hold for every delta >= delta*.
std::uint64_t threshold(unsigned k, unsigned r);

/// Each edge gets an independent uniform colour in 1..k+1 from a seeded
/// mt19937_64 stream (portable: no std distributions involved).
Colouring random_colouring(const Hypergraph& h, unsigned k, std::uint64_t seed);

/// Vertices at which some colour appears more than d(v)/k times, ascending.
/// Throws PreconditionError unless the palette is exactly k+1.
std::vector<VertexId> bad_vertices(const Hypergraph& h, const Colouring& c, unsigned k);

struct ResampleRun {
  std::uint64_t seed = 0;
  std::uint64_t max_rounds = 0;
  std::uint64_t rounds_used = 0;
  /// Set on success; absent when the round budget ran out.
  std::optional<Colouring> colouring;

  bool succeeded() const noexcept { return colouring.has_value(); }
};

/// 10'000 * |E| (at least 1).
std::uint64_t default_max_rounds(const Hypergraph& h);

/// Starts from random_colouring and, while some vertex is bad, redraws every
/// edge at the lowest-id bad vertex. Stops after `max_rounds` redraws.
ResampleRun resample_colour(const Hypergraph& h, unsigned k, std::uint64_t seed,
                            std::uint64_t max_rounds);

}  // namespace mcolour
