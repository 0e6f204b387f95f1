#include "mcolour/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

#include "mcolour/error.hpp"

namespace mcolour {

namespace {

// Uniform integer in [0, n) by rejection on the raw stream.
std::size_t below(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

void check_shape(const GenSpec& spec) {
  if (spec.r < 1) throw PreconditionError("edge size r must be at least 1");
  if (spec.r > spec.n) {
    throw PreconditionError("edge size r=" + std::to_string(spec.r) + " exceeds n=" +
                            std::to_string(spec.n));
  }
}

// r distinct vertices from [0, n) with `pool` as a scratch permutation.
std::vector<VertexId> sample_subset(std::mt19937_64& rng, std::vector<VertexId>& pool, std::size_t r) {
  for (std::size_t i = 0; i < r; ++i) std::swap(pool[i], pool[i + below(rng, pool.size() - i)]);
  return {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(r)};
}

std::vector<VertexId> identity(std::size_t n) {
  std::vector<VertexId> out(n);
  for (VertexId v = 0; v < n; ++v) out[v] = v;
  return out;
}

Hypergraph linear_greedy(std::size_t n, std::size_t r, std::size_t min_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<VertexId>> edges;
  std::vector<std::size_t> degree(n, 0);
  std::unordered_set<std::uint64_t> covered;
  std::vector<VertexId> deficient;
  for (VertexId v = 0; v < n; ++v) {
    if (min_degree > 0) deficient.push_back(v);
  }
  const std::size_t budget = 2000 + 50 * n;
  std::size_t failures = 0;

  std::vector<VertexId> others;
  while (!deficient.empty()) {
    if (failures > budget) {
      throw PreconditionError("linear generator gave up after " + std::to_string(budget) +
                              " consecutive rejections (n=" + std::to_string(n) +
                              ", r=" + std::to_string(r) +
                              ", min_degree=" + std::to_string(min_degree) + ")");
    }
    const VertexId anchor = deficient[below(rng, deficient.size())];
    others.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (v != anchor) others.push_back(v);
    }
    auto edge = sample_subset(rng, others, r - 1);
    edge.push_back(anchor);
    std::sort(edge.begin(), edge.end());

    bool ok = true;
    for (std::size_t a = 0; a < edge.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < edge.size(); ++b) {
        if (covered.count(edge[a] * std::uint64_t{n} + edge[b])) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      ++failures;
      continue;
    }
    failures = 0;
    for (std::size_t a = 0; a < edge.size(); ++a) {
      for (std::size_t b = a + 1; b < edge.size(); ++b) covered.insert(edge[a] * std::uint64_t{n} + edge[b]);
      ++degree[edge[a]];
    }
    edges.push_back(std::move(edge));
    std::erase_if(deficient, [&](VertexId v) { return degree[v] >= min_degree; });
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace

Model parse_model(std::string_view name) {
  if (name == "uniform") return Model::uniform;
  if (name == "linear") return Model::linear;
  if (name == "graph") return Model::graph;
  if (name == "regular") return Model::regular;
  throw PreconditionError("unknown model '" + std::string(name) + "'");
}

std::string_view model_name(Model m) {
  switch (m) {
    case Model::uniform: return "uniform";
    case Model::linear: return "linear";
    case Model::graph: return "graph";
    case Model::regular: return "regular";
  }
  return "?";
}

Hypergraph gen_uniform(const GenSpec& spec) {
  check_shape(spec);
  std::mt19937_64 rng(spec.seed);
  std::vector<VertexId> pool = identity(spec.n);
  std::vector<std::size_t> degree(spec.n, 0);
  std::vector<std::vector<VertexId>> edges;
  std::size_t satisfied = spec.min_degree == 0 ? spec.n : 0;
  while (satisfied < spec.n) {
    auto edge = sample_subset(rng, pool, spec.r);
    for (VertexId v : edge) {
      if (++degree[v] == spec.min_degree) ++satisfied;
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(spec.n, std::move(edges));
}

Hypergraph gen_linear(const GenSpec& spec) {
  check_shape(spec);
  return linear_greedy(spec.n, spec.r, spec.min_degree, spec.seed);
}

Hypergraph gen_graph(const GenSpec& spec) {
  GenSpec g = spec;
  g.r = 2;
  check_shape(g);
  return linear_greedy(g.n, 2, g.min_degree, g.seed);
}

Hypergraph gen_regular(const GenSpec& spec) {
  check_shape(spec);
  const std::size_t d = spec.min_degree;
  const std::size_t r = spec.r;
  if ((spec.n * d) % r != 0) {
    throw PreconditionError("n*d = " + std::to_string(spec.n * d) + " is not divisible by r=" +
                            std::to_string(r));
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<VertexId> stubs;
  stubs.reserve(spec.n * d);
  for (VertexId v = 0; v < spec.n; ++v) stubs.insert(stubs.end(), d, v);
  for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[below(rng, i)]);

  const std::size_t blocks = stubs.size() / r;
  const auto has_repeat = [&](std::size_t b) {
    for (std::size_t i = b * r; i < (b + 1) * r; ++i) {
      for (std::size_t j = i + 1; j < (b + 1) * r; ++j) {
        if (stubs[i] == stubs[j]) return true;
      }
    }
    return false;
  };

  const std::size_t budget = 1000 * (stubs.size() + 1);
  std::size_t attempts = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    while (has_repeat(b)) {
      if (++attempts > budget) {
        throw PreconditionError("regular generator could not separate repeated vertices");
      }
      const std::size_t i = b * r + below(rng, r);
      const std::size_t j = below(rng, stubs.size());
      const std::size_t other = j / r;
      if (other == b) continue;
      std::swap(stubs[i], stubs[j]);
      // Keep the swap only if it does not break an already repaired block.
      if (other < b && has_repeat(other)) std::swap(stubs[i], stubs[j]);
    }
  }

  std::vector<std::vector<VertexId>> edges(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    edges[b].assign(stubs.begin() + static_cast<std::ptrdiff_t>(b * r),
                    stubs.begin() + static_cast<std::ptrdiff_t>((b + 1) * r));
  }
  return Hypergraph(spec.n, std::move(edges));
}

Hypergraph generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::uniform: return gen_uniform(spec);
    case Model::linear: return gen_linear(spec);
    case Model::graph: return gen_graph(spec);
    case Model::regular: return gen_regular(spec);
  }
  throw PreconditionError("unknown model");
}

}  // namespace mcolour
