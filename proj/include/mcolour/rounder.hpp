#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcolour/hypergraph.hpp"
#include "mcolour/rational.hpp"

namespace mcolour {

/// Dense row-major rational matrix. Small and simple; the rounder itself works
/// on the sparse ConstraintSystem below.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> multiply(std::span<const Rational> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Vertex/edge incidence restricted to constrained vertices (rows) and
/// fractional edges (columns). Every entry is 0 or 1.
struct ConstraintSystem {
  std::vector<VertexId> rows;
  std::vector<EdgeId> columns;
  /// For each column, the row indices (into `rows`) holding a 1, ascending.
  std::vector<std::vector<std::uint32_t>> support;

  RationalMatrix dense() const;
};

/// Mutable state of the iterative rounding walk.
///   - `fixed[e]` edges hold 0 or 1 in `h`; all other edges are in `frac_edges`
///     and hold values strictly inside (0,1).
///   - `constrained` lists vertices with at least rank+1 fractional edges; their
///     incidence sums over `h` equal those over the original weights.
struct RoundingState {
  const Hypergraph* graph = nullptr;
  std::size_t rank = 0;
  Weighting original;
  Weighting h;
  std::vector<bool> fixed;
  std::vector<EdgeId> frac_edges;
  std::vector<std::size_t> frac_degree;
  std::vector<VertexId> constrained;
};

struct RoundingIteration {
  std::size_t constrained = 0;
  std::size_t fractional = 0;
  Rational step;
  std::vector<EdgeId> fixed;
};

struct RoundingTrace {
  std::vector<RoundingIteration> iterations;
};

struct RoundingResult {
  Weighting x;
  RoundingTrace trace;
};

struct BoundaryStep {
  Rational step;
  /// Positions (into the input span) that land exactly on 0 or 1.
  std::vector<std::size_t> hit;
  /// h + step * d, componentwise.
  std::vector<Rational> moved;
};

/// Rounds z to a 0/1 weighting x with |sum_{e∋v} x(e) - sum_{e∋v} z(e)| < rank at
/// every vertex, strictly. Edges whose weight is already 0 or 1 are kept as is.
RoundingResult round_weights(const Hypergraph& h, std::span<const Rational> z);

/// Fixes the integral entries of z and computes the constrained set.
RoundingState init_rounding(const Hypergraph& h, std::span<const Rational> z);

/// Recomputes `constrained` from `frac_degree`.
void refresh_constrained(RoundingState& state);

/// Throws InvariantBreach if the system does not have more columns than rows.
ConstraintSystem build_system(const RoundingState& state);

/// Nonzero kernel vector by column-order elimination: the first column that
/// depends on its predecessors gets coefficient 1, later columns 0.
/// Requires cols > rows.
std::vector<Rational> kernel_direction(const ConstraintSystem& system);
std::vector<Rational> kernel_direction(const RationalMatrix& a);

/// Largest t > 0 keeping h + t*d inside [0,1]^n. Requires 0 < h < 1 and d != 0.
BoundaryStep step_to_boundary(std::span<const Rational> h, std::span<const Rational> d);

/// One walk iteration. Returns false (and does nothing) when no vertex is constrained.
bool rounding_step(RoundingState& state, RoundingTrace* trace = nullptr);

/// Rounds the remaining fractional edges (h >= 1/2 goes to 1) once every
/// vertex has at most `rank` fractional edges, and returns the 0/1 result.
Weighting finalize_low_degree(RoundingState& state);

}  // namespace mcolour
