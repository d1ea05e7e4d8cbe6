#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "evencliff/matrix.hpp"

namespace evencliff {

enum class SolveMode { Exact, Float };

struct SolveOptions {
  SolveMode mode = SolveMode::Exact;
  /// Pivot threshold used only in Float mode.
  double tolerance = 1e-9;
};

using Vector = std::vector<Rational>;

/// AB − BA. Throws dimension_error unless A and B are square of equal size.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Exact rank. Dense storage runs fraction-free Bareiss elimination with
/// smallest-magnitude pivoting; sparse storage runs the sparse echelon.
std::size_t rank(const Matrix& m);

/// Rank in 64-bit floating point with the given pivot threshold.
std::size_t numerical_rank(const Matrix& m, double tolerance = 1e-9);

/// Exact basis of {v : Mv = 0}; one vector per non-pivot column.
std::vector<Vector> nullspace_basis(const Matrix& m);

/// Number of antisymmetric coordinates x_ab, a < b.
constexpr std::size_t antisym_dim(std::size_t n) { return n * (n - 1) / 2; }

/// Lexicographic index of the coordinate (a, b), a < b.
constexpr std::size_t antisym_index(std::size_t n, std::size_t a, std::size_t b) {
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

/// E_ab − E_ba for a < b, lexicographic in (a, b); entry (a, b) is +1.
std::vector<Matrix> antisym_basis(std::size_t n);

/// Antisymmetric matrix with the given coordinates in antisym_basis order.
Matrix antisym_from_coords(std::size_t n, std::span<const Rational> coords);

/**
 * A linearly independent family of antisymmetric N×N matrices.
 * Construction checks both properties and throws std::invalid_argument otherwise.
 */
class SubalgebraBasis {
 public:
  SubalgebraBasis(std::size_t ambient_dim, std::vector<Matrix> elements);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& operator[](std::size_t i) const { return elements_[i]; }

  /// True iff X lies in the span (exact rank test).
  bool contains(const Matrix& x) const;

 private:
  std::size_t ambient_dim_;
  std::vector<Matrix> elements_;
};

/// Coefficient rows (flattened entries) of the given matrices, as one sparse matrix.
Matrix flatten_rows(std::span<const Matrix> mats);

/// Dimension of span(mats), exact.
std::size_t span_dim(std::span<const Matrix> mats);

/// X minus its trace-form orthogonal projection onto span(basis).
/// Throws std::domain_error if the Gram matrix of `basis` is singular.
Matrix project_off_span(const Matrix& x, std::span<const Matrix> basis);
Matrix project_off_span(const Matrix& x, const SubalgebraBasis& basis);

/// Inverse of a square exact matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

}  // namespace evencliff
