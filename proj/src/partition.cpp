#include "mcolour/partition.hpp"

#include <string>

#include "mcolour/error.hpp"
#include "mcolour/rounder.hpp"

namespace mcolour {

namespace {

void require_bound(std::size_t delta, unsigned k, std::size_t r) {
  if (k < 2) throw PreconditionError("k must be at least 2, got " + std::to_string(k));
  const std::size_t need = 2 * r * k * k;
  if (delta < need) {
    throw PreconditionError("minimum degree " + std::to_string(delta) + " is below 2*r*k^2 = " +
                            std::to_string(need) + " (r=" + std::to_string(r) +
                            ", k=" + std::to_string(k) + ")");
  }
}

Rational q(std::size_t n) { return Rational(mpz_class(static_cast<unsigned long>(n))); }

}  // namespace

Rational alpha(unsigned i, std::size_t delta, unsigned k, std::size_t r) {
  require_bound(delta, k, r);
  if (i < 1 || i > k) {
    throw PreconditionError("round index " + std::to_string(i) + " outside 1.." + std::to_string(k));
  }
  const Rational per_class = q(delta) / k;
  const Rational numerator = per_class - q(r);
  const Rational denominator = q(delta) - (i - 1) * (per_class - 2 * q(r));
  return Rational(numerator / denominator);
}

std::vector<Rational> alpha_schedule(std::size_t delta, unsigned k, std::size_t r) {
  std::vector<Rational> out;
  for (unsigned i = 1; i <= k; ++i) out.push_back(alpha(i, delta, k, r));
  return out;
}

void check_class_bounds(const Hypergraph& h, std::size_t delta, unsigned k, std::size_t r,
                        unsigned i, std::span<const std::size_t> class_degree,
                        std::span<const std::size_t> remaining_degree) {
  const Rational shrink = q(delta) - i * (q(delta) / k - 2 * q(r));
  const auto breach = [&](VertexId v, const char* what, std::size_t observed, const Rational& bound) {
    return InvariantBreach(std::string(what) + " bound broken at vertex " + std::to_string(v + 1) +
                           " round " + std::to_string(i) + ": observed " +
                           std::to_string(observed) + " > " + format_rational(bound));
  };
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const Rational b = q(h.degree(v)) / q(delta);
    const Rational class_bound = b * q(delta) / k;
    if (q(class_degree[v]) > class_bound) throw breach(v, "class", class_degree[v], class_bound);
    const Rational remaining_bound = b * shrink;
    if (q(remaining_degree[v]) > remaining_bound) {
      throw breach(v, "residual", remaining_degree[v], remaining_bound);
    }
  }
}

PartitionResult colour_partition(const Hypergraph& h, unsigned k) {
  if (h.num_vertices() == 0) throw PreconditionError("hypergraph has no vertices");
  const std::size_t delta = h.min_degree();
  const std::size_t r = h.rank();
  require_bound(delta, k, r);

  PartitionResult result;
  result.delta = delta;
  result.rank = r;
  result.colouring.palette = k + 1;
  result.colouring.colours.assign(h.num_edges(), 0);

  std::vector<EdgeId> remaining(h.num_edges());
  for (EdgeId e = 0; e < remaining.size(); ++e) remaining[e] = e;

  for (unsigned i = 1; i <= k; ++i) {
    const Rational a = alpha(i, delta, k, r);
    const Hypergraph rest = h.subhypergraph(remaining);
    const Weighting z(rest.num_edges(), a);
    const auto rounded = round_weights(rest, z);

    std::vector<std::size_t> class_degree(h.num_vertices(), 0);
    std::vector<std::size_t> remaining_degree(h.num_vertices(), 0);
    std::vector<EdgeId> next;
    std::size_t class_size = 0;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      const EdgeId e = remaining[j];
      const bool chosen = rounded.x[j] == 1;
      auto& degrees = chosen ? class_degree : remaining_degree;
      for (VertexId v : h.edge(e)) ++degrees[v];
      if (chosen) {
        result.colouring.colours[e] = i;
        ++class_size;
      } else {
        next.push_back(e);
      }
    }
    check_class_bounds(h, delta, k, r, i, class_degree, remaining_degree);
    result.rounds.push_back({i, a, class_size});
    remaining = std::move(next);
  }

  // Residual: the i = k residual bound gives at most 2 r k d(v) / delta <= d(v)/k.
  std::vector<std::size_t> last_degree(h.num_vertices(), 0);
  for (EdgeId e : remaining) {
    result.colouring.colours[e] = k + 1;
    for (VertexId v : h.edge(e)) ++last_degree[v];
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const Rational bound = 2 * q(r) * k * q(h.degree(v)) / q(delta);
    if (q(last_degree[v]) > bound) {
      throw InvariantBreach("colour " + std::to_string(k + 1) + " appears " +
                            std::to_string(last_degree[v]) + " times at vertex " +
                            std::to_string(v + 1) + ", above 2rk*d(v)/delta = " +
                            format_rational(bound));
    }
  }
  return result;
}

}  // namespace mcolour
