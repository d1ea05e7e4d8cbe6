#include "evencliff/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace evencliff {

namespace {

Storage result_storage(const Matrix& a, const Matrix& b) {
  return (a.storage() == Storage::Sparse && b.storage() == Storage::Sparse) ? Storage::Sparse
                                                                            : Storage::Dense;
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
}

// Merges two sorted rows as a + sign*b.
std::vector<Entry> merge_rows(const std::vector<Entry>& a, const std::vector<Entry>& b, int sign) {
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, sign > 0 ? b[j].value : Rational(-b[j].value)});
      ++j;
    } else {
      Rational v = sign > 0 ? Rational(a[i].value + b[j].value) : Rational(a[i].value - b[j].value);
      if (v != 0) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Matrix Matrix::build_sparse(std::size_t rows, std::size_t cols,
                            std::vector<std::vector<Entry>> row_lists) {
  Matrix m(rows, cols, Storage::Sparse);
  m.row_ptr_.assign(rows + 1, 0);
  std::size_t total = 0;
  for (const auto& r : row_lists) total += r.size();
  m.col_idx_.reserve(total);
  m.values_.reserve(total);
  for (std::size_t i = 0; i < rows; ++i) {
    for (auto& e : row_lists[i]) {
      m.col_idx_.push_back(e.col);
      m.values_.push_back(std::move(e.value));
    }
    m.row_ptr_[i + 1] = m.col_idx_.size();
  }
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols, Storage storage) {
  if (storage == Storage::Sparse) return build_sparse(rows, cols, std::vector<std::vector<Entry>>(rows));
  Matrix m(rows, cols, Storage::Dense);
  m.values_.assign(rows * cols, Rational(0));
  return m;
}

Matrix Matrix::identity(std::size_t n, Storage storage) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, Rational(1)});
  return from_triplets(n, n, std::move(t), storage);
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows, Storage storage) {
  std::vector<std::vector<Rational>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v, storage);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, Storage storage) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw dimension_error("from_rows: ragged rows");
    for (std::size_t j = 0; j < nc; ++j)
      if (rows[i][j] != 0) t.push_back({i, j, rows[i][j]});
  }
  return from_triplets(nr, nc, std::move(t), storage);
}

Matrix Matrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets,
                             Storage storage) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<std::vector<Entry>> lists(rows);
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols)
      throw dimension_error("from_triplets: coordinate (" + std::to_string(t.row) + "," +
                            std::to_string(t.col) + ") outside " + std::to_string(rows) + "x" +
                            std::to_string(cols));
    auto& row = lists[t.row];
    if (!row.empty() && row.back().col == t.col)
      row.back().value += t.value;
    else
      row.push_back({t.col, std::move(t.value)});
  }
  for (auto& row : lists)
    std::erase_if(row, [](const Entry& e) { return e.value == 0; });
  Matrix sparse = build_sparse(rows, cols, std::move(lists));
  return storage == Storage::Sparse ? sparse : sparse.with_storage(Storage::Dense);
}

Rational Matrix::operator()(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix index out of range");
  if (storage_ == Storage::Dense) return values_[i * cols_ + j];
  auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
  auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
  auto it = std::lower_bound(first, last, j);
  if (it != last && *it == j) return values_[static_cast<std::size_t>(it - col_idx_.begin())];
  return Rational(0);
}

Matrix Matrix::with_storage(Storage storage) const {
  if (storage == storage_) return *this;
  if (storage == Storage::Dense) {
    Matrix m(rows_, cols_, Storage::Dense);
    m.values_.assign(rows_ * cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
        m.values_[i * cols_ + col_idx_[k]] = values_[k];
    return m;
  }
  std::vector<std::vector<Entry>> lists(rows_);
  for (std::size_t i = 0; i < rows_; ++i) lists[i] = row_entries(i);
  return build_sparse(rows_, cols_, std::move(lists));
}

std::vector<Entry> Matrix::row_entries(std::size_t i) const {
  std::vector<Entry> out;
  for_each_in_row(i, [&](std::size_t j, const Rational& v) { out.push_back({j, v}); });
  return out;
}

std::vector<Triplet> Matrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < rows_; ++i)
    for_each_in_row(i, [&](std::size_t j, const Rational& v) { out.push_back({i, j, v}); });
  return out;
}

std::size_t Matrix::nonzeros() const {
  if (storage_ == Storage::Sparse) return col_idx_.size();
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](const Rational& v) { return v != 0; }));
}

Matrix Matrix::transpose() const {
  std::vector<Triplet> t = triplets();
  for (auto& e : t) std::swap(e.row, e.col);
  return from_triplets(cols_, rows_, std::move(t), storage_);
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& v : m.values_) v = -v;
  return m;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

bool Matrix::is_antisymmetric() const { return is_square() && (transpose() == -*this); }

bool Matrix::is_symmetric() const { return is_square() && (transpose() == *this); }

Matrix Matrix::block(std::size_t offset, std::size_t size) const {
  if (!is_square() || offset + size > rows_) throw dimension_error("block: out of range");
  std::vector<Triplet> t;
  for (std::size_t i = offset; i < offset + size; ++i)
    for_each_in_row(i, [&](std::size_t j, const Rational& v) {
      if (j >= offset && j < offset + size) t.push_back({i - offset, j - offset, v});
    });
  return from_triplets(size, size, std::move(t), storage_);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "operator+");
  std::vector<std::vector<Entry>> lists(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) lists[i] = merge_rows(a.row_entries(i), b.row_entries(i), +1);
  Matrix m = Matrix::build_sparse(a.rows(), a.cols(), std::move(lists));
  return m.with_storage(result_storage(a, b));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "operator-");
  std::vector<std::vector<Entry>> lists(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) lists[i] = merge_rows(a.row_entries(i), b.row_entries(i), -1);
  Matrix m = Matrix::build_sparse(a.rows(), a.cols(), std::move(lists));
  return m.with_storage(result_storage(a, b));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw dimension_error("operator*: inner dimensions " + std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()) + " differ");
  const Matrix bs = b.to_sparse();
  std::vector<Rational> acc(b.cols());
  std::vector<char> touched(b.cols(), 0);
  std::vector<std::size_t> cols_used;
  std::vector<std::vector<Entry>> lists(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cols_used.clear();
    a.for_each_in_row(i, [&](std::size_t k, const Rational& av) {
      bs.for_each_in_row(k, [&](std::size_t j, const Rational& bv) {
        if (!touched[j]) {
          touched[j] = 1;
          acc[j] = 0;
          cols_used.push_back(j);
        }
        acc[j] += av * bv;
      });
    });
    std::sort(cols_used.begin(), cols_used.end());
    for (std::size_t j : cols_used) {
      touched[j] = 0;
      if (acc[j] != 0) lists[i].push_back({j, acc[j]});
    }
  }
  Matrix m = Matrix::build_sparse(a.rows(), b.cols(), std::move(lists));
  return m.with_storage(result_storage(a, b));
}

Matrix operator*(const Rational& s, const Matrix& a) {
  if (s == 0) return Matrix::zero(a.rows(), a.cols(), a.storage());
  Matrix m = a;
  for (auto& v : m.values_) v *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ra = a.row_entries(i);
    auto rb = b.row_entries(i);
    if (ra.size() != rb.size()) return false;
    for (std::size_t k = 0; k < ra.size(); ++k)
      if (ra[k].col != rb[k].col || ra[k].value != rb[k].value) return false;
  }
  return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  std::vector<Triplet> t;
  const auto tb = b.triplets();
  for (const auto& ea : a.triplets())
    for (const auto& eb : tb)
      t.push_back({ea.row * b.rows() + eb.row, ea.col * b.cols() + eb.col, ea.value * eb.value});
  return Matrix::from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), std::move(t),
                               result_storage(a, b));
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  std::vector<Triplet> t = a.triplets();
  for (auto& e : b.triplets()) t.push_back({e.row + a.rows(), e.col + a.cols(), e.value});
  return Matrix::from_triplets(a.rows() + b.rows(), a.cols() + b.cols(), std::move(t),
                               result_storage(a, b));
}

Rational trace_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "trace_inner");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto rb = b.row_entries(i);
    std::size_t k = 0;
    a.for_each_in_row(i, [&](std::size_t j, const Rational& v) {
      while (k < rb.size() && rb[k].col < j) ++k;
      if (k < rb.size() && rb[k].col == j) sum += v * rb[k].value;
    });
  }
  return sum;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace evencliff
