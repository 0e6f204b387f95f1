#include "mcolour/linear.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mcolour/error.hpp"

namespace mcolour {

namespace {

void require_linear(const Hypergraph& h) {
  if (const auto pair = h.linearity_witness()) {
    throw PreconditionError("hypergraph is not linear: edges " + std::to_string(pair->first + 1) +
                            " and " + std::to_string(pair->second + 1) +
                            " share more than one vertex");
  }
}

void require_degree(const Hypergraph& h, unsigned k) {
  if (k < 2) throw PreconditionError("k must be at least 2, got " + std::to_string(k));
  if (h.num_vertices() == 0) throw PreconditionError("hypergraph has no vertices");
  const std::size_t need = static_cast<std::size_t>(k) * k - k;
  const std::size_t delta = h.min_degree();
  if (delta < need || delta == 0) {
    throw PreconditionError("minimum degree " + std::to_string(delta) + " is below k^2-k = " +
                            std::to_string(need) + " (k=" + std::to_string(k) + ")");
  }
}

}  // namespace

SplitDegrees split_degrees(std::size_t d, unsigned k) {
  if (k < 2) throw PreconditionError("k must be at least 2, got " + std::to_string(k));
  if (d < static_cast<std::size_t>(k) * k - k || d == 0) {
    throw PreconditionError("degree " + std::to_string(d) + " is below k^2-k for k=" +
                            std::to_string(k));
  }
  SplitDegrees out{d % k, d / k};
  if (out.t < out.m) throw InvariantBreach("split with t < m");
  return out;
}

SplitResult split_hypergraph(const Hypergraph& h, unsigned k) {
  require_linear(h);
  require_degree(h, k);

  SplitResult result;
  auto& splits = result.map.vertices;
  splits.resize(h.num_vertices());
  // Sub-vertex assigned to each (edge, position-in-edge).
  std::vector<std::vector<VertexId>> image(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) image[e].resize(h.edge(e).size());

  VertexId next = 0;
  for (VertexId u = 0; u < h.num_vertices(); ++u) {
    const auto incident = h.incident(u);
    const auto [m, t] = split_degrees(incident.size(), k);
    auto& split = splits[u];
    split.m = m;
    split.t = t;
    split.first = next;
    split.blocks.resize(t);
    std::size_t pos = 0;
    for (std::size_t j = 0; j < t; ++j) {
      const std::size_t size = j < m ? k + 1 : k;
      for (std::size_t n = 0; n < size; ++n, ++pos) {
        const EdgeId e = incident[pos];
        split.blocks[j].push_back(e);
        const auto edge = h.edge(e);
        const auto slot = std::lower_bound(edge.begin(), edge.end(), u) - edge.begin();
        image[e][slot] = next + static_cast<VertexId>(j);
      }
    }
    next += static_cast<VertexId>(t);
  }
  result.split = Hypergraph(next, std::move(image));
  return result;
}

LineGraph::LineGraph(const Hypergraph& h) : adjacency_(h.num_edges()) {
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const auto inc = h.incident(v);
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        adjacency_[inc[a]].push_back(inc[b]);
        adjacency_[inc[b]].push_back(inc[a]);
      }
    }
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
}

std::size_t LineGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

std::vector<ColourId> greedy_colour(const LineGraph& lg, std::span<const EdgeId> order) {
  std::vector<ColourId> colour(lg.num_nodes(), 0);
  std::vector<EdgeId> seen_by(lg.max_degree() + 2, UINT32_MAX);
  for (EdgeId node : order) {
    for (EdgeId nb : lg.neighbours(node)) {
      const ColourId c = colour[nb];
      if (c != 0 && c < seen_by.size()) seen_by[c] = node;
    }
    ColourId c = 1;
    while (seen_by[c] == node) ++c;
    colour[node] = c;
  }
  return colour;
}

LinearResult colour_linear(const Hypergraph& h, unsigned k) {
  auto [split, map] = split_hypergraph(h, k);
  const std::size_t r = h.rank();

  LinearResult result;
  result.split_max_degree = split.max_degree();
  if (result.split_max_degree > k + 1) {
    throw InvariantBreach("split hypergraph has maximum degree " +
                          std::to_string(result.split_max_degree) + " > k+1");
  }

  const LineGraph lg(split);
  result.line_graph_max_degree = lg.max_degree();
  const std::size_t cap = split.rank() * (result.split_max_degree ? result.split_max_degree - 1 : 0);
  if (result.line_graph_max_degree > cap || result.line_graph_max_degree > k * r) {
    throw InvariantBreach("line graph maximum degree " +
                          std::to_string(result.line_graph_max_degree) + " exceeds k*r = " +
                          std::to_string(k * r));
  }

  std::vector<EdgeId> order(split.num_edges());
  std::iota(order.begin(), order.end(), 0);
  result.colouring.colours = greedy_colour(lg, order);
  result.colouring.palette = static_cast<ColourId>(k * r + 1);
  result.colours_used = result.colouring.max_used();
  result.split = std::move(map);
  return result;
}

}  // namespace mcolour
