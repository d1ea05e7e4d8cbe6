#include <gtest/gtest.h>

#include "evencliff/clifford.hpp"
#include "evencliff/linalg.hpp"
#include "oracle.hpp"

using namespace evencliff;

namespace {

// Module dimensions by r mod 8, written out independently of irrep_info.
struct Row {
  std::size_t d;
  int v;
  int field_dim;
};

Row expected_irreps(int r) {
  const int half = r / 2;
  switch (r % 8) {
    case 1: case 7: return {std::size_t{1} << half, 1, 1};
    case 2: case 6: return {std::size_t{1} << half, 1, 2};
    case 3: case 5: return {std::size_t{1} << (half + 1), 1, 4};
    case 4: return {std::size_t{1} << half, 2, 4};
    default: return {std::size_t{1} << (half - 1), 2, 1};
  }
}

// Dimension of {X ∈ gl(d) : XK = KX for all K}, by brute force.
std::size_t oracle_commutant(const std::vector<Matrix>& ks) {
  const std::size_t d = ks.front().rows();
  oracle::Dense rows;
  for (const auto& km : ks) {
    const auto k = oracle::dense(km);
    // (XK − KX)_ij = Σ_l X_il K_lj − K_il X_lj ; unknown X_ab at column a·d + b
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<oracle::Q> row(d * d);
        for (std::size_t l = 0; l < d; ++l) {
          row[i * d + l] += k[l][j];
          row[l * d + j] -= k[i][l];
        }
        rows.push_back(std::move(row));
      }
  }
  return d * d - oracle::rank(std::move(rows));
}

}  // namespace

TEST(IrrepInfo, MatchesExpectedIrreps) {
  for (int r = 2; r <= 17; ++r) {
    const IrrepInfo info = irrep_info(r);
    const Row want = expected_irreps(r);
    EXPECT_EQ(info.d, want.d) << "r=" << r;
    EXPECT_EQ(info.v, want.v) << "r=" << r;
    EXPECT_EQ(field_dimension(info.field), want.field_dim) << "r=" << r;
  }
  EXPECT_EQ(irrep_info(9).d, 16u);
  EXPECT_EQ(irrep_info(16).d, 128u);
  EXPECT_THROW(irrep_info(1), std::invalid_argument);
}

TEST(Clifford, Bivectors) {
  const auto b = bivectors(4);
  ASSERT_EQ(b.size(), 6u);
  EXPECT_EQ(b.front(), (Bivector{1, 2}));
  EXPECT_EQ(b.back(), (Bivector{3, 4}));
  for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(bivector_index(4, b[k]), k);
}

TEST(Clifford, MonomialProduct) {
  // e1 e1 = −1
  EXPECT_EQ(clifford_product({{1}, 1}, {{1}, 1}, 3), (CliffordMonomial{{}, -1}));
  // e2 e1 = −e1 e2
  EXPECT_EQ(clifford_product({{2}, 1}, {{1}, 1}, 3), (CliffordMonomial{{1, 2}, -1}));
  // (e1 e2)(e1 e2) = −1
  EXPECT_EQ(clifford_product({{1, 2}, 1}, {{1, 2}, 1}, 3), (CliffordMonomial{{}, -1}));
}

TEST(Clifford, BracketByHand) {
  // [e1e2, e2e3] = −e1e3 − e2e3e1e2 = −2 e1e3
  const auto b = bivector_bracket({1, 2}, {2, 3}, 3);
  EXPECT_FALSE(b.zero);
  EXPECT_EQ(b.result, (Bivector{1, 3}));
  EXPECT_EQ(b.coefficient, -2);
  EXPECT_TRUE(bivector_bracket({1, 2}, {3, 4}, 4).zero);
  EXPECT_TRUE(bivector_bracket({1, 2}, {1, 2}, 4).zero);
}

TEST(Clifford, GeneratorsAnticommute) {
  for (int n = 1; n <= 10; ++n) {
    const auto g = clifford_generators(n);
    ASSERT_EQ(g.size(), static_cast<std::size_t>(n));
    const Matrix minus_id = -Matrix::identity(g.front().rows());
    for (std::size_t a = 0; a < g.size(); ++a) {
      EXPECT_TRUE(g[a].is_antisymmetric());
      EXPECT_EQ(g[a] * g[a], minus_id);
      for (std::size_t b = a + 1; b < g.size(); ++b) EXPECT_TRUE((g[a] * g[b] + g[b] * g[a]).is_zero());
    }
  }
}

TEST(Clifford, EvenGeneratorsShapeAndBracket) {
  for (int r = 2; r <= 10; ++r) {
    const auto sets = build_even_generators(r);
    const IrrepInfo info = irrep_info(r);
    ASSERT_EQ(sets.size(), static_cast<std::size_t>(info.v)) << "r=" << r;
    const auto bivs = bivectors(r);
    for (const auto& g : sets) {
      EXPECT_EQ(g.dim(), info.d);
      for (std::size_t a = 0; a < bivs.size(); ++a)
        for (std::size_t b = a + 1; b < bivs.size(); ++b) {
          const auto sym = bivector_bracket(bivs[a], bivs[b], r);
          const Matrix c = commutator(g.generators()[a], g.generators()[b]);
          if (sym.zero)
            EXPECT_TRUE(c.is_zero());
          else
            EXPECT_EQ(c, Rational(sym.coefficient) * g.generator(sym.result.i, sym.result.j));
        }
    }
  }
}

TEST(Clifford, VolumeElementSeparatesHalves) {
  for (int r : {4, 8, 12}) {
    const auto sets = build_even_generators(r);
    ASSERT_EQ(sets.size(), 2u);
    EXPECT_EQ(*sets[0].half(), HalfLabel::Plus);
    EXPECT_EQ(volume_element(sets[0]), Matrix::identity(sets[0].dim()));
    EXPECT_EQ(volume_element(sets[1]), -Matrix::identity(sets[1].dim()));
    EXPECT_EQ(intertwiner_dimension(sets[0], sets[1]), 0u);
    EXPECT_EQ(intertwiner_dimension(sets[0], sets[0]), static_cast<std::size_t>(field_dimension(irrep_info(r).field)));
  }
}

TEST(Clifford, SchurMatchesFieldColumn) {
  for (int r = 2; r <= 12; ++r)
    for (const auto& g : build_even_generators(r))
      EXPECT_EQ(schur_check(g), field_dimension(irrep_info(r).field)) << "r=" << r;
}

TEST(Clifford, CommutantAgreesWithOracle) {
  for (int r = 2; r <= 7; ++r)
    for (const auto& g : build_even_generators(r))
      EXPECT_EQ(commutant_dimension(g), oracle_commutant(g.generators())) << "r=" << r;
}

TEST(Clifford, GammaSetRejectsBadInput) {
  const auto g = build_even_generators(3).front();
  std::vector<Matrix> bad = g.generators();
  bad[0] = Matrix::identity(g.dim());
  EXPECT_THROW(GammaSet(3, g.dim(), bad), std::invalid_argument);
  EXPECT_THROW(GammaSet(3, g.dim(), {g.generators()[0]}), std::invalid_argument);
  EXPECT_THROW(g.generator(1, 1), std::invalid_argument);
  EXPECT_EQ(g.generator(2, 1), -g.generator(1, 2));
}
