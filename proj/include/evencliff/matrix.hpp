#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "evencliff/rational.hpp"

namespace evencliff {

class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

enum class Storage { Dense, Sparse };

/// One stored nonzero of a sparse row.
struct Entry {
  std::size_t col;
  Rational value;
};

/**
 * Immutable exact rational matrix.
 *
 * Two storage modes share one value semantics: `Dense` keeps every entry in
 * row-major order, `Sparse` keeps compressed rows (CSR) with only nonzeros and
 * is the natural carrier for signed-permutation generators. Equality and every
 * operation are storage-agnostic; results are sparse when all operands are.
 */
class Matrix {
 public:
  Matrix() = default;

  static Matrix zero(std::size_t rows, std::size_t cols, Storage storage = Storage::Sparse);
  static Matrix identity(std::size_t n, Storage storage = Storage::Sparse);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows,
                          Storage storage = Storage::Dense);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows,
                          Storage storage = Storage::Dense);
  /// Duplicate coordinates are summed; zeros are dropped.
  static Matrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets,
                              Storage storage = Storage::Sparse);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Storage storage() const { return storage_; }

  Rational operator()(std::size_t i, std::size_t j) const;

  Matrix with_storage(Storage storage) const;
  Matrix to_dense() const { return with_storage(Storage::Dense); }
  Matrix to_sparse() const { return with_storage(Storage::Sparse); }

  /// Nonzeros of row `i` in increasing column order, whatever the storage.
  std::vector<Entry> row_entries(std::size_t i) const;

  template <class F>
  void for_each_in_row(std::size_t i, F&& f) const {
    if (storage_ == Storage::Sparse) {
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) f(col_idx_[k], values_[k]);
    } else {
      for (std::size_t j = 0; j < cols_; ++j) {
        const Rational& v = values_[i * cols_ + j];
        if (v != 0) f(j, v);
      }
    }
  }

  /// Row-major sorted list of nonzeros.
  std::vector<Triplet> triplets() const;
  std::size_t nonzeros() const;

  Matrix transpose() const;
  Matrix operator-() const;

  bool is_zero() const;
  bool is_antisymmetric() const;
  bool is_symmetric() const;

  /// Entries restricted to the leading-aligned square block [offset, offset + size).
  Matrix block(std::size_t offset, std::size_t size) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Matrix(std::size_t rows, std::size_t cols, Storage storage)
      : rows_(rows), cols_(cols), storage_(storage) {}

  static Matrix build_sparse(std::size_t rows, std::size_t cols,
                             std::vector<std::vector<Entry>> row_lists);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Storage storage_ = Storage::Sparse;
  // Dense: rows_*cols_ values. Sparse: CSR arrays.
  std::vector<Rational> values_;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_idx_;
};

/// Kronecker product, left factor outermost: (A ⊗ B)[(a·p + s), (b·q + t)] = A[a,b]·B[s,t].
Matrix kron(const Matrix& a, const Matrix& b);

/// Block-diagonal sum; an empty (0×0) operand contributes nothing.
Matrix block_diag(const Matrix& a, const Matrix& b);

/// Trace form ⟨A, B⟩ = trace(Aᵀ B) = Σ A_ij B_ij.
Rational trace_inner(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

}  // namespace evencliff
