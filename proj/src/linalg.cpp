#include "evencliff/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "evencliff/sparse_echelon.hpp"

namespace evencliff {

namespace {

struct IntegerEchelon {
  std::vector<std::vector<Integer>> rows;  // first `rank` rows are in echelon form
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free Bareiss elimination; each row is first scaled to integers by
// the lcm of its denominators, which leaves the row space unchanged.
IntegerEchelon bareiss_echelon(const Matrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  IntegerEchelon e;
  e.rows.assign(nr, std::vector<Integer>(nc, 0));
  for (std::size_t i = 0; i < nr; ++i) {
    Integer lcm_den = 1;
    m.for_each_in_row(i, [&](std::size_t, const Rational& v) { lcm_den = lcm(lcm_den, Integer(v.get_den())); });
    m.for_each_in_row(i, [&](std::size_t j, const Rational& v) { e.rows[i][j] = Integer(v * lcm_den); });
  }
  auto& a = e.rows;
  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < nc && k < nr; ++c) {
    // Smallest-magnitude nonzero pivot keeps intermediate minors small.
    std::size_t best = nr;
    for (std::size_t i = k; i < nr; ++i)
      if (a[i][c] != 0 && (best == nr || abs(a[i][c]) < abs(a[best][c]))) best = i;
    if (best == nr) continue;
    std::swap(a[k], a[best]);
    for (std::size_t i = k + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer t = a[k][c] * a[i][j] - a[i][c] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    prev = a[k][c];
    e.pivot_cols.push_back(c);
    ++k;
  }
  e.rows.resize(k);
  return e;
}

std::vector<Vector> dense_nullspace(const Matrix& m) {
  const std::size_t nc = m.cols();
  IntegerEchelon e = bareiss_echelon(m);
  const std::size_t r = e.pivot_cols.size();
  std::vector<std::vector<Rational>> red(r, std::vector<Rational>(nc));
  for (std::size_t i = 0; i < r; ++i) {
    const Rational lead(e.rows[i][e.pivot_cols[i]]);
    for (std::size_t j = 0; j < nc; ++j) red[i][j] = Rational(e.rows[i][j]) / lead;
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = e.pivot_cols[i];
    for (std::size_t h = 0; h < i; ++h) {
      if (red[h][pc] == 0) continue;
      const Rational f = red[h][pc];
      for (std::size_t j = pc; j < nc; ++j) red[h][j] -= f * red[i][j];
    }
  }
  std::vector<char> is_pivot(nc, 0);
  for (std::size_t pc : e.pivot_cols) is_pivot[pc] = 1;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    Vector v(nc, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[e.pivot_cols[i]] = -red[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<SparseTerm<Rational>> sparse_row(const Matrix& m, std::size_t i) {
  std::vector<SparseTerm<Rational>> row;
  m.for_each_in_row(i, [&](std::size_t j, const Rational& v) { row.push_back({j, v}); });
  return row;
}

}  // namespace

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw dimension_error("commutator: operands must be square of equal size, got " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  return a * b - b * a;
}

std::size_t rank(const Matrix& m) {
  if (m.storage() == Storage::Dense) return bareiss_echelon(m).pivot_cols.size();
  SparseEchelon<ExactField> ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.add_row(sparse_row(m, i));
  return ech.rank();
}

std::size_t numerical_rank(const Matrix& m, double tolerance) {
  SparseEchelon<FloatField> ech(m.cols(), FloatField{tolerance});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<SparseTerm<double>> row;
    m.for_each_in_row(i, [&](std::size_t j, const Rational& v) { row.push_back({j, v.get_d()}); });
    ech.add_row(std::move(row));
  }
  return ech.rank();
}

std::vector<Vector> nullspace_basis(const Matrix& m) {
  if (m.storage() == Storage::Dense) return dense_nullspace(m);
  SparseEchelon<ExactField> ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.add_row(sparse_row(m, i));
  return ech.nullspace();
}

std::vector<Matrix> antisym_basis(std::size_t n) {
  if (n == 0) throw std::invalid_argument("antisym_basis: N must be at least 1");
  std::vector<Matrix> out;
  out.reserve(antisym_dim(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      out.push_back(Matrix::from_triplets(n, n, {{a, b, Rational(1)}, {b, a, Rational(-1)}}));
  return out;
}

Matrix antisym_from_coords(std::size_t n, std::span<const Rational> coords) {
  if (coords.size() != antisym_dim(n)) throw dimension_error("antisym_from_coords: wrong coordinate count");
  std::vector<Triplet> t;
  std::size_t k = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b, ++k)
      if (coords[k] != 0) {
        t.push_back({a, b, coords[k]});
        t.push_back({b, a, -coords[k]});
      }
  return Matrix::from_triplets(n, n, std::move(t));
}

SubalgebraBasis::SubalgebraBasis(std::size_t ambient_dim, std::vector<Matrix> elements)
    : ambient_dim_(ambient_dim), elements_(std::move(elements)) {
  for (const auto& x : elements_) {
    if (x.rows() != ambient_dim_ || x.cols() != ambient_dim_)
      throw std::invalid_argument("SubalgebraBasis: element of wrong size");
    if (!x.is_antisymmetric()) throw std::invalid_argument("SubalgebraBasis: element is not antisymmetric");
  }
  if (span_dim(elements_) != elements_.size())
    throw std::invalid_argument("SubalgebraBasis: elements are linearly dependent");
}

bool SubalgebraBasis::contains(const Matrix& x) const {
  std::vector<Matrix> all = elements_;
  all.push_back(x);
  return span_dim(all) == elements_.size();
}

Matrix flatten_rows(std::span<const Matrix> mats) {
  std::vector<Triplet> t;
  std::size_t width = mats.empty() ? 0 : mats.front().rows() * mats.front().cols();
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() * mats[k].cols() != width) throw dimension_error("flatten_rows: mixed sizes");
    for (const auto& e : mats[k].triplets()) t.push_back({k, e.row * mats[k].cols() + e.col, e.value});
  }
  return Matrix::from_triplets(mats.size(), width, std::move(t));
}

std::size_t span_dim(std::span<const Matrix> mats) {
  if (mats.empty()) return 0;
  return rank(flatten_rows(mats));
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw dimension_error("inverse: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    m.for_each_in_row(i, [&](std::size_t j, const Rational& v) { a[i][j] = v; });
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("inverse: matrix is singular");
    std::swap(a[p], a[c]);
    const Rational lead = a[c][c];
    for (auto& v : a[c]) v /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][n + j] != 0) t.push_back({i, j, a[i][n + j]});
  return Matrix::from_triplets(n, n, std::move(t), m.storage());
}

Matrix project_off_span(const Matrix& x, std::span<const Matrix> basis) {
  if (basis.empty()) return x;
  const std::size_t k = basis.size();
  std::vector<Triplet> gram;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational g = trace_inner(basis[i], basis[j]);
      if (g != 0) gram.push_back({i, j, g});
    }
  Matrix g_inv;
  try {
    g_inv = inverse(Matrix::from_triplets(k, k, std::move(gram)));
  } catch (const std::domain_error&) {
    throw std::domain_error("project_off_span: degenerate Gram matrix");
  }
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) rhs[i] = trace_inner(basis[i], x);
  Matrix out = x;
  for (std::size_t i = 0; i < k; ++i) {
    Rational c = 0;
    g_inv.for_each_in_row(i, [&](std::size_t j, const Rational& v) { c += v * rhs[j]; });
    if (c != 0) out = out - c * basis[i];
  }
  return out;
}

Matrix project_off_span(const Matrix& x, const SubalgebraBasis& basis) {
  return project_off_span(x, std::span<const Matrix>(basis.elements()));
}

}  // namespace evencliff
