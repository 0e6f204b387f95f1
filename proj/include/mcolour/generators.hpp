#pragma once

#include <cstdint>
#include <string_view>

#include "mcolour/hypergraph.hpp"

namespace mcolour {

enum class Model { uniform, linear, graph, regular };

Model parse_model(std::string_view name);
std::string_view model_name(Model m);

struct GenSpec {
  Model model = Model::uniform;
  std::size_t n = 0;
  std::size_t r = 2;
  std::size_t min_degree = 0;
  std::uint64_t seed = 0;
};

/// Adds uniformly random r-subsets until every vertex has degree >= min_degree.
/// Repeated edges may occur.
Hypergraph gen_uniform(const GenSpec& spec);

/// Greedy random linear hypergraph: each attempt pairs a random under-degree
/// vertex with r-1 random others and keeps the edge only if it meets every
/// kept edge in at most one vertex. Throws PreconditionError after too many
/// consecutive rejections.
Hypergraph gen_linear(const GenSpec& spec);

/// Random simple graph (the linear model with r = 2; spec.r is ignored).
Hypergraph gen_graph(const GenSpec& spec);

/// r-uniform hypergraph with every degree exactly min_degree, by shuffling
/// vertex stubs into r-blocks and repairing blocks with repeated vertices by
/// random swaps. Requires n * min_degree divisible by r.
Hypergraph gen_regular(const GenSpec& spec);

Hypergraph generate(const GenSpec& spec);

}  // namespace mcolour
