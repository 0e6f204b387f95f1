#pragma once

#include <optional>
#include <vector>

#include "mcolour/hypergraph.hpp"

namespace mcolour {

struct Violation {
  VertexId vertex = 0;
  ColourId colour = 0;
  std::size_t count = 0;
  std::size_t bound = 0;  // floor(d(v)/k)
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
  bool valid = true;
  std::vector<Violation> violations;  // ordered by (vertex, colour)
};

/// Checks every (vertex, colour) count against floor(d(v)/k). Any palette at
/// least as large as the largest colour used is accepted.
VerifyReport verify(const Hypergraph& h, unsigned k, const Colouring& c);

/// Largest palette^|E| brute_force will enumerate.
inline constexpr double kBruteForceLimit = 1e8;

/// Lexicographically first valid colouring over {1..palette}^E, or nullopt.
/// Prunes a prefix as soon as some vertex exceeds its bound. Throws
/// SearchTooLarge when palette^|E| > 1e8.
std::optional<Colouring> brute_force(const Hypergraph& h, unsigned k, ColourId palette);

}  // namespace mcolour
