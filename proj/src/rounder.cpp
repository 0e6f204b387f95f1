#include "mcolour/rounder.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mcolour/error.hpp"

namespace mcolour {

namespace {

using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

// Walks the columns in order, keeping an echelon basis of the columns seen so
// far together with each basis vector's expression in terms of original
// columns. The first column that reduces to zero yields the kernel vector.
template <class ColumnFn>
std::vector<Rational> first_dependency(std::size_t rows, std::size_t cols, ColumnFn column) {
  struct BasisVector {
    std::uint32_t pivot;
    SparseVector entries;
    SparseVector combination;
  };
  std::vector<BasisVector> basis;
  std::vector<Rational> work(rows);
  std::vector<Rational> combination(cols);
  Rational factor;

  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [row, value] : column(j)) work[row] = value;
    combination[j] = 1;

    for (const auto& b : basis) {
      if (sgn(work[b.pivot]) == 0) continue;
      factor = work[b.pivot];
      for (const auto& [row, value] : b.entries) work[row] -= factor * value;
      for (const auto& [col, value] : b.combination) combination[col] -= factor * value;
    }

    std::size_t pivot = rows;
    for (std::size_t row = 0; row < rows; ++row) {
      if (sgn(work[row]) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == rows) {
      combination.resize(cols);
      return combination;
    }

    BasisVector next{static_cast<std::uint32_t>(pivot), {}, {}};
    const Rational scale = work[pivot];
    for (std::size_t row = pivot; row < rows; ++row) {
      if (sgn(work[row]) != 0) {
        next.entries.emplace_back(static_cast<std::uint32_t>(row), work[row] / scale);
        work[row] = 0;
      }
    }
    for (std::size_t col = 0; col <= j; ++col) {
      if (sgn(combination[col]) != 0) {
        next.combination.emplace_back(static_cast<std::uint32_t>(col), combination[col] / scale);
        combination[col] = 0;
      }
    }
    basis.push_back(std::move(next));
  }
  throw InvariantBreach("columns are linearly independent; no kernel direction exists");
}

bool is_zero_or_one(const Rational& q) { return sgn(q) == 0 || q == 1; }

}  // namespace

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long value : row) data_.emplace_back(value);
  }
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw PreconditionError("dimension mismatch in matrix product");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  }
  return out;
}

RationalMatrix ConstraintSystem::dense() const {
  RationalMatrix a(rows.size(), columns.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    for (auto i : support[j]) a(i, j) = 1;
  }
  return a;
}

std::vector<Rational> kernel_direction(const ConstraintSystem& system) {
  if (system.columns.size() <= system.rows.size()) {
    throw PreconditionError("kernel_direction needs more columns than rows");
  }
  SparseVector scratch;
  return first_dependency(system.rows.size(), system.columns.size(), [&](std::size_t j) -> const SparseVector& {
    scratch.clear();
    for (auto i : system.support[j]) scratch.emplace_back(i, Rational(1));
    return scratch;
  });
}

std::vector<Rational> kernel_direction(const RationalMatrix& a) {
  if (a.cols() <= a.rows()) throw PreconditionError("kernel_direction needs more columns than rows");
  SparseVector scratch;
  return first_dependency(a.rows(), a.cols(), [&](std::size_t j) -> const SparseVector& {
    scratch.clear();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (sgn(a(i, j)) != 0) scratch.emplace_back(static_cast<std::uint32_t>(i), a(i, j));
    }
    return scratch;
  });
}

BoundaryStep step_to_boundary(std::span<const Rational> h, std::span<const Rational> d) {
  if (h.size() != d.size()) throw PreconditionError("weights and direction differ in length");
  BoundaryStep out;
  bool found = false;
  Rational bound;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (sgn(h[i]) <= 0 || h[i] >= 1) {
      throw PreconditionError("step_to_boundary needs weights strictly inside (0,1)");
    }
    const int sign = sgn(d[i]);
    if (sign == 0) continue;
    bound = sign > 0 ? Rational((1 - h[i]) / d[i]) : Rational(h[i] / -d[i]);
    if (!found || bound < out.step) {
      out.step = bound;
      found = true;
    }
  }
  if (!found) throw PreconditionError("step_to_boundary needs a nonzero direction");

  out.moved.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    out.moved.push_back(sgn(d[i]) == 0 ? h[i] : Rational(h[i] + out.step * d[i]));
    if (sgn(d[i]) != 0 && is_zero_or_one(out.moved.back())) out.hit.push_back(i);
  }
  return out;
}

RoundingState init_rounding(const Hypergraph& h, std::span<const Rational> z) {
  validate_weighting(h, z);
  RoundingState state;
  state.graph = &h;
  state.rank = h.rank();
  state.original.assign(z.begin(), z.end());
  state.h = state.original;
  state.fixed.assign(h.num_edges(), false);
  state.frac_degree.assign(h.num_vertices(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (is_zero_or_one(z[e])) {
      state.fixed[e] = true;
      continue;
    }
    state.frac_edges.push_back(e);
    for (VertexId v : h.edge(e)) ++state.frac_degree[v];
  }
  refresh_constrained(state);
  return state;
}

void refresh_constrained(RoundingState& state) {
  state.constrained.clear();
  for (VertexId v = 0; v < state.frac_degree.size(); ++v) {
    if (state.frac_degree[v] >= state.rank + 1) state.constrained.push_back(v);
  }
}

ConstraintSystem build_system(const RoundingState& state) {
  const auto& graph = *state.graph;
  ConstraintSystem system;
  system.rows = state.constrained;
  system.columns = state.frac_edges;
  std::vector<std::uint32_t> row_of(graph.num_vertices(), UINT32_MAX);
  for (std::uint32_t i = 0; i < system.rows.size(); ++i) row_of[system.rows[i]] = i;
  system.support.reserve(system.columns.size());
  for (EdgeId e : system.columns) {
    std::vector<std::uint32_t> rows;
    for (VertexId v : graph.edge(e)) {
      if (row_of[v] != UINT32_MAX) rows.push_back(row_of[v]);
    }
    std::sort(rows.begin(), rows.end());
    system.support.push_back(std::move(rows));
  }
  if (system.columns.size() <= system.rows.size()) {
    throw InvariantBreach("constraint system has " + std::to_string(system.rows.size()) +
                          " rows but only " + std::to_string(system.columns.size()) + " columns");
  }
  return system;
}

bool rounding_step(RoundingState& state, RoundingTrace* trace) {
  if (state.constrained.empty()) return false;
  const auto system = build_system(state);
  const auto direction = kernel_direction(system);

  std::vector<Rational> current;
  current.reserve(system.columns.size());
  for (EdgeId e : system.columns) current.push_back(state.h[e]);
  const auto boundary = step_to_boundary(current, direction);

  RoundingIteration record;
  record.constrained = system.rows.size();
  record.fractional = system.columns.size();
  record.step = boundary.step;

  for (std::size_t j = 0; j < system.columns.size(); ++j) {
    if (sgn(direction[j]) != 0) state.h[system.columns[j]] = boundary.moved[j];
  }
  for (std::size_t j : boundary.hit) {
    const EdgeId e = system.columns[j];
    state.fixed[e] = true;
    for (VertexId v : state.graph->edge(e)) --state.frac_degree[v];
    record.fixed.push_back(e);
  }
  std::erase_if(state.frac_edges, [&](EdgeId e) { return state.fixed[e]; });
  refresh_constrained(state);

  if (trace) trace->iterations.push_back(std::move(record));
  return true;
}

Weighting finalize_low_degree(RoundingState& state) {
  for (VertexId v = 0; v < state.frac_degree.size(); ++v) {
    if (state.frac_degree[v] > state.rank) {
      throw InvariantBreach("vertex " + std::to_string(v + 1) + " still has " +
                            std::to_string(state.frac_degree[v]) + " fractional edges");
    }
  }
  const Rational half(1, 2);
  for (EdgeId e : state.frac_edges) {
    state.h[e] = state.h[e] >= half ? 1 : 0;
    state.fixed[e] = true;
    for (VertexId v : state.graph->edge(e)) --state.frac_degree[v];
  }
  state.frac_edges.clear();
  state.constrained.clear();
  return state.h;
}

RoundingResult round_weights(const Hypergraph& h, std::span<const Rational> z) {
  auto state = init_rounding(h, z);
  RoundingResult result;
  while (rounding_step(state, &result.trace)) {
  }
  result.x = finalize_low_degree(state);
  return result;
}

}  // namespace mcolour
