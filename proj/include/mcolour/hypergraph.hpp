#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mcolour/rational.hpp"

namespace mcolour {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using ColourId = std::uint32_t;

/// Immutable hypergraph over vertices [0, n). Edges are vertex sets stored in
/// ascending order; the edge list may contain repeated edges (a multiset).
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates every edge: non-empty, ids in range, no repeated vertex.
  /// Vertex order inside an edge is irrelevant; edges are stored sorted.
  Hypergraph(std::size_t num_vertices, std::vector<std::vector<VertexId>> edges);

  std::size_t num_vertices() const noexcept { return incidence_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const VertexId> edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::vector<VertexId>>& edges() const noexcept { return edges_; }

  /// Edge ids containing v, ascending.
  std::span<const EdgeId> incident(VertexId v) const;

  std::size_t degree(VertexId v) const { return incident(v).size(); }

  /// Throws PreconditionError on a hypergraph with no vertices.
  std::size_t min_degree() const;
  std::size_t max_degree() const noexcept;

  /// Largest edge size; 0 for an edge-free hypergraph.
  std::size_t rank() const noexcept { return rank_; }

  bool is_linear() const { return !linearity_witness().has_value(); }

  /// First pair of edges (in edge order of the later edge) sharing two or more vertices.
  std::optional<std::pair<EdgeId, EdgeId>> linearity_witness() const;

  /// Same vertex set, keeping only the listed edges in the given order.
  Hypergraph subhypergraph(std::span<const EdgeId> keep) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::size_t rank_ = 0;
};

/// Colours are 1-based and aligned with Hypergraph::edges().
struct Colouring {
  std::vector<ColourId> colours;
  ColourId palette = 0;

  /// Largest colour actually used (0 if there are no edges).
  ColourId max_used() const noexcept;
};

/// Checks the length and that every colour lies in [1, palette].
void validate_colouring(const Hypergraph& h, const Colouring& c);

/// One rational in [0,1] per edge.
using Weighting = std::vector<Rational>;

void validate_weighting(const Hypergraph& h, std::span<const Rational> w);

/// Complete graph K_n as a rank-2 hypergraph; edges in lexicographic order.
Hypergraph complete_graph(std::size_t n);

}  // namespace mcolour
