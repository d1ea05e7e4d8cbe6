#include <gtest/gtest.h>

#include <random>

#include "evencliff/matrix.hpp"
#include "oracle.hpp"

using namespace evencliff;

namespace {
Rational q(long n, long d) {
  Rational v(n, d);
  v.canonicalize();
  return v;
}
}  // namespace

TEST(Rational, RendersLowestTerms) {
  EXPECT_EQ(to_string(q(6, 4)), "3/2");
  EXPECT_EQ(to_string(q(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-7", "3/2", "-5/12"}) EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
}

TEST(Matrix, IdentityAndZero) {
  const Matrix i = Matrix::identity(3);
  EXPECT_EQ(i(1, 1), 1);
  EXPECT_EQ(i(0, 1), 0);
  EXPECT_TRUE(Matrix::zero(2, 3).is_zero());
  EXPECT_EQ(i * i, i);
}

TEST(Matrix, StorageDoesNotAffectEquality) {
  const Matrix a = Matrix::from_rows({{1, 2}, {0, -3}});
  EXPECT_EQ(a, a.to_sparse());
  EXPECT_EQ(a.to_sparse().storage(), Storage::Sparse);
  EXPECT_EQ(a.to_sparse().nonzeros(), 3u);
  EXPECT_EQ(a.to_sparse() * a, a * a.to_sparse());
}

TEST(Matrix, FromTripletsSumsDuplicatesAndDropsZeros) {
  const Matrix m = Matrix::from_triplets(2, 2, {{0, 0, 1}, {0, 0, 2}, {1, 1, 1}, {1, 1, -1}});
  EXPECT_EQ(m(0, 0), 3);
  EXPECT_EQ(m.nonzeros(), 1u);
  EXPECT_THROW(Matrix::from_triplets(2, 2, {{2, 0, 1}}), dimension_error);
}

TEST(Matrix, ShapeErrors) {
  const Matrix a = Matrix::identity(2), b = Matrix::identity(3);
  EXPECT_THROW(a + b, dimension_error);
  EXPECT_THROW(a * Matrix::zero(3, 1), dimension_error);
  EXPECT_THROW(Matrix::from_rows({{1, 2}, {3}}), dimension_error);
  EXPECT_THROW(a(2, 0), std::out_of_range);
}

TEST(Matrix, KronLeftFactorOutermost) {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 4u);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q)
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < 2; ++t) EXPECT_EQ(k(p * 2 + s, q * 2 + t), a(p, q) * b(s, t));
}

TEST(Matrix, BlockDiagAndBlock) {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows({{5}});
  const Matrix d = block_diag(a, b);
  EXPECT_EQ(d.rows(), 3u);
  EXPECT_EQ(d(2, 2), 5);
  EXPECT_EQ(d(0, 2), 0);
  EXPECT_EQ(d.block(0, 2), a);
  EXPECT_EQ(d.block(2, 1), b);
  EXPECT_EQ(block_diag(a, Matrix()), a);
}

TEST(Matrix, TraceInnerAndTranspose) {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  EXPECT_EQ(trace_inner(a, a), 30);
  EXPECT_EQ(a.transpose()(0, 1), 3);
  EXPECT_TRUE((a - a.transpose()).is_antisymmetric());
  EXPECT_TRUE((a + a.transpose()).is_symmetric());
}

// Products agree with the schoolbook oracle on random rational matrices.
TEST(MatrixProperty, ProductMatchesOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-3, 3), keep(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5, k = 1 + (trial * 7) % 4, m = 1 + (trial * 3) % 6;
    std::vector<Triplet> ta, tb;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (keep(rng) == 0) ta.push_back({i, j, q(val(rng), 1 + keep(rng))});
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (keep(rng) == 0) tb.push_back({i, j, q(val(rng), 1 + keep(rng))});
    const Matrix a = Matrix::from_triplets(n, k, ta), b = Matrix::from_triplets(k, m, tb);
    const auto want = oracle::mul(oracle::dense(a), oracle::dense(b));
    EXPECT_EQ(oracle::dense(a * b), want);
    EXPECT_EQ(oracle::dense(a.to_dense() * b), want);
  }
}
