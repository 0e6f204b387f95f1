#include "mcolour/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "mcolour/error.hpp"

namespace mcolour {

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<std::vector<VertexId>> edges)
    : edges_(std::move(edges)), incidence_(num_vertices) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    if (edge.empty()) throw PreconditionError("edge " + std::to_string(e + 1) + " is empty");
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw PreconditionError("edge " + std::to_string(e + 1) + " repeats a vertex");
    }
    if (edge.back() >= num_vertices) {
      throw PreconditionError("edge " + std::to_string(e + 1) + " references vertex " +
                              std::to_string(edge.back() + 1) + " beyond " +
                              std::to_string(num_vertices));
    }
    rank_ = std::max(rank_, edge.size());
    for (VertexId v : edge) incidence_[v].push_back(static_cast<EdgeId>(e));
  }
}

std::span<const EdgeId> Hypergraph::incident(VertexId v) const {
  if (v >= incidence_.size()) {
    throw PreconditionError("vertex id " + std::to_string(v) + " out of range");
  }
  return incidence_[v];
}

std::size_t Hypergraph::min_degree() const {
  if (incidence_.empty()) throw PreconditionError("min_degree of a hypergraph without vertices");
  std::size_t best = incidence_.front().size();
  for (const auto& inc : incidence_) best = std::min(best, inc.size());
  return best;
}

std::size_t Hypergraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

std::optional<std::pair<EdgeId, EdgeId>> Hypergraph::linearity_witness() const {
  // Each unordered vertex pair may be covered by at most one edge.
  std::unordered_map<std::uint64_t, EdgeId> owner;
  const std::uint64_t n = incidence_.size();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    for (std::size_t a = 0; a < edge.size(); ++a) {
      for (std::size_t b = a + 1; b < edge.size(); ++b) {
        const std::uint64_t key = edge[a] * n + edge[b];
        auto [it, inserted] = owner.emplace(key, static_cast<EdgeId>(e));
        if (!inserted) return std::make_pair(it->second, static_cast<EdgeId>(e));
      }
    }
  }
  return std::nullopt;
}

Hypergraph Hypergraph::subhypergraph(std::span<const EdgeId> keep) const {
  std::vector<std::vector<VertexId>> kept;
  kept.reserve(keep.size());
  for (EdgeId e : keep) kept.push_back(edges_.at(e));
  return Hypergraph(num_vertices(), std::move(kept));
}

ColourId Colouring::max_used() const noexcept {
  return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end());
}

void validate_colouring(const Hypergraph& h, const Colouring& c) {
  if (c.colours.size() != h.num_edges()) {
    throw PreconditionError("colouring has " + std::to_string(c.colours.size()) +
                            " entries for " + std::to_string(h.num_edges()) + " edges");
  }
  for (std::size_t e = 0; e < c.colours.size(); ++e) {
    if (c.colours[e] < 1 || c.colours[e] > c.palette) {
      throw PreconditionError("edge " + std::to_string(e + 1) + " has colour " +
                              std::to_string(c.colours[e]) + " outside palette 1.." +
                              std::to_string(c.palette));
    }
  }
}

void validate_weighting(const Hypergraph& h, std::span<const Rational> w) {
  if (w.size() != h.num_edges()) {
    throw PreconditionError("weighting has " + std::to_string(w.size()) + " entries for " +
                            std::to_string(h.num_edges()) + " edges");
  }
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (w[e] < 0 || w[e] > 1) {
      throw PreconditionError("weight of edge " + std::to_string(e + 1) + " is " +
                              format_rational(w[e]) + ", outside [0,1]");
    }
  }
}

Hypergraph complete_graph(std::size_t n) {
  std::vector<std::vector<VertexId>> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace mcolour
