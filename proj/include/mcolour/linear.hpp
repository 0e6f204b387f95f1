#pragma once

#include <span>
#include <vector>

#include "mcolour/hypergraph.hpp"

namespace mcolour {

/// d = m + t*k with 0 <= m < k: m sub-vertices take k+1 edges, t - m take k.
struct SplitDegrees {
  std::size_t m = 0;
  std::size_t t = 0;
  friend bool operator==(const SplitDegrees&, const SplitDegrees&) = default;
};

/// Requires k >= 2 and d >= k^2 - k (which guarantees t >= m).
SplitDegrees split_degrees(std::size_t d, unsigned k);

struct VertexSplit {
  std::size_t m = 0;
  std::size_t t = 0;
  /// Sub-vertex id in the split hypergraph of this vertex's first sub-vertex.
  VertexId first = 0;
  /// Edge ids (of the original hypergraph) carried by each sub-vertex.
  std::vector<std::vector<EdgeId>> blocks;
};

struct SplitMap {
  std::vector<VertexSplit> vertices;
};

struct SplitResult {
  Hypergraph split;
  SplitMap map;
};

/// Replaces each vertex u by t_u sub-vertices, handing out u's incident edges
/// in ascending edge id: the first m_u sub-vertices get k+1 edges, the rest k.
/// Edge e of the result is the image of edge e of the input.
SplitResult split_hypergraph(const Hypergraph& h, unsigned k);

/// Simple graph on the hyperedges; two nodes are adjacent when the edges meet.
class LineGraph {
 public:
  explicit LineGraph(const Hypergraph& h);

  std::size_t num_nodes() const noexcept { return adjacency_.size(); }
  std::span<const EdgeId> neighbours(EdgeId node) const { return adjacency_.at(node); }
  std::size_t degree(EdgeId node) const { return adjacency_.at(node).size(); }
  std::size_t max_degree() const noexcept;

 private:
  std::vector<std::vector<EdgeId>> adjacency_;
};

/// Greedy proper colouring visiting nodes in `order`; each node gets the
/// smallest colour (1-based) unused by already coloured neighbours.
std::vector<ColourId> greedy_colour(const LineGraph& lg, std::span<const EdgeId> order);

struct LinearResult {
  Colouring colouring;  // palette k*r + 1
  SplitMap split;
  std::size_t split_max_degree = 0;
  std::size_t line_graph_max_degree = 0;
  ColourId colours_used = 0;
};

/// 1/k-majority (kr+1)-edge-colouring of a linear hypergraph with minimum
/// degree at least k^2 - k: split, greedily colour the line graph of the split
/// hypergraph, and pull the colours back edge by edge.
LinearResult colour_linear(const Hypergraph& h, unsigned k);

}  // namespace mcolour
