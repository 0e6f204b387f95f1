#include "mcolour/verify.hpp"

#include <cmath>
#include <string>

#include "mcolour/error.hpp"

namespace mcolour {

VerifyReport verify(const Hypergraph& h, unsigned k, const Colouring& c) {
  if (k < 1) throw PreconditionError("k must be positive");
  if (c.colours.size() != h.num_edges()) {
    throw PreconditionError("colouring has " + std::to_string(c.colours.size()) +
                            " entries for " + std::to_string(h.num_edges()) + " edges");
  }
  const ColourId used = c.max_used();
  if (c.palette < used) {
    throw PreconditionError("palette " + std::to_string(c.palette) + " is smaller than colour " +
                            std::to_string(used) + " in use");
  }
  for (std::size_t e = 0; e < c.colours.size(); ++e) {
    if (c.colours[e] == 0) throw PreconditionError("edge " + std::to_string(e + 1) + " has colour 0");
  }

  VerifyReport report;
  std::vector<std::size_t> count(used + 1, 0);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const auto inc = h.incident(v);
    if (inc.empty()) continue;
    std::fill(count.begin(), count.end(), 0);
    for (EdgeId e : inc) ++count[c.colours[e]];
    const std::size_t bound = inc.size() / k;
    for (ColourId col = 1; col <= used; ++col) {
      if (count[col] > bound) report.violations.push_back({v, col, count[col], bound});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::optional<Colouring> brute_force(const Hypergraph& h, unsigned k, ColourId palette) {
  if (k < 1) throw PreconditionError("k must be positive");
  if (palette < 1) throw PreconditionError("palette must be at least 1");
  const std::size_t m = h.num_edges();
  if (static_cast<double>(m) * std::log10(static_cast<double>(palette)) > std::log10(kBruteForceLimit) + 1e-12) {
    throw SearchTooLarge(std::to_string(palette) + "^" + std::to_string(m) +
                         " colourings exceed the 1e8 search guard");
  }

  std::vector<std::size_t> bound(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) bound[v] = h.degree(v) / k;
  std::vector<std::size_t> count(h.num_vertices() * palette, 0);
  const auto slot = [&](VertexId v, ColourId c) -> std::size_t& { return count[v * palette + c - 1]; };

  Colouring c;
  c.palette = palette;
  c.colours.assign(m, 0);

  // Iterative depth-first search; colours[e] == 0 means "not yet tried".
  std::size_t e = 0;
  while (true) {
    if (e == m) return c;
    if (c.colours[e] != 0) {
      for (VertexId v : h.edge(e)) --slot(v, c.colours[e]);
    }
    bool placed = false;
    for (ColourId next = c.colours[e] + 1; next <= palette; ++next) {
      bool fits = true;
      for (VertexId v : h.edge(e)) {
        if (slot(v, next) + 1 > bound[v]) {
          fits = false;
          break;
        }
      }
      if (fits) {
        c.colours[e] = next;
        for (VertexId v : h.edge(e)) ++slot(v, next);
        placed = true;
        break;
      }
    }
    if (placed) {
      ++e;
      continue;
    }
    c.colours[e] = 0;
    if (e == 0) return std::nullopt;
    --e;
  }
}

}  // namespace mcolour
