#include <gtest/gtest.h>

#include "evencliff/bounds.hpp"
#include "evencliff/normalizer.hpp"
#include "oracle.hpp"

using namespace evencliff;

namespace {

std::vector<oracle::Dense> dense_gens(const EvenCliffordStructure& s) {
  std::vector<oracle::Dense> out;
  for (const auto& j : s.generators()) out.push_back(oracle::dense(j));
  return out;
}

struct Instance {
  int r;
  Multiplicities m;
};

std::vector<Instance> small_instances() {
  std::vector<Instance> out;
  for (int r = 3; r <= 9; ++r)
    for (long a = 1; a <= 2; ++a) {
      if (r % 4 == 0)
        for (long b = 1; b <= 2; ++b) out.push_back({r, Multiplicities::pair(a, b)});
      else
        out.push_back({r, Multiplicities::single(a)});
    }
  return out;
}

}  // namespace

// Values first obtained from the brute-force oracle, then frozen.
TEST(NormalizerOracle, FrozenValuesReproduce) {
  const auto s31 = build(3, Multiplicities::single(1));
  EXPECT_EQ(oracle::centralizer_dim(dense_gens(s31)), 3u);
  EXPECT_EQ(oracle::normalizer_dim(dense_gens(s31)), 6u);
  const auto s61 = build(6, Multiplicities::single(1));
  EXPECT_EQ(oracle::centralizer_dim(dense_gens(s61)), 1u);
  const auto s51 = build(5, Multiplicities::single(1));
  EXPECT_EQ(oracle::normalizer_dim(dense_gens(s51)), 13u);
  const auto s91 = build(9, Multiplicities::single(1));
  EXPECT_EQ(oracle::centralizer_dim(dense_gens(s91), true), 0u);
}

TEST(Normalizer, CentralizerExamples) {
  EXPECT_EQ(centralizer_basis(build(3, Multiplicities::single(1))).size(), 3u);
  EXPECT_EQ(centralizer_basis(build(9, Multiplicities::single(1))).size(), 0u);
  EXPECT_EQ(centralizer_basis(build(6, Multiplicities::single(1))).size(), 1u);
}

TEST(Normalizer, NormalizerExamples) {
  EXPECT_EQ(normalizer_basis(build(3, Multiplicities::single(1))).size(), 6u);
  EXPECT_EQ(normalizer_basis(build(5, Multiplicities::single(1))).size(), 13u);
  EXPECT_EQ(antisym_dim(4), 6u);  // r = 3, m = 1: the normalizer is all of so(4)
}

TEST(Normalizer, ExpectedDimsExamples) {
  EXPECT_EQ(expected_dims(3, Multiplicities::single(2)).centralizer, 10u);
  EXPECT_EQ(expected_dims(8, Multiplicities::pair(1, 1)).centralizer, 0u);
  EXPECT_EQ(expected_dims(8, Multiplicities::pair(1, 1)).normalizer, 28u);
  EXPECT_EQ(expected_dims(10, Multiplicities::single(1)).centralizer, 1u);
  EXPECT_EQ(expected_dims(10, Multiplicities::single(1)).normalizer, 46u);
}

TEST(Normalizer, IsotropyExamples) {
  EXPECT_EQ(isotropy_dim(3, Multiplicities::single(1)), 6u);
  EXPECT_EQ(isotropy_dim(9, Multiplicities::single(1)), 36u);
  EXPECT_EQ(isotropy_dim(16, Multiplicities::pair(1, 0)), 120u);
  EXPECT_THROW(isotropy_dim(2, Multiplicities::single(1)), std::invalid_argument);
}

TEST(Normalizer, DimensionsMatchExpectedExact) {
  for (const auto& [r, m] : small_instances()) {
    const auto s = build(r, m);
    const auto e = expected_dims(r, m);
    const auto c = centralizer_dimension(s);
    EXPECT_FALSE(c.numerical);
    EXPECT_EQ(c.dim, e.centralizer) << "r=" << r << " mult=" << m.to_string();
    EXPECT_EQ(normalizer_dimension(s).dim, e.normalizer) << "r=" << r << " mult=" << m.to_string();
  }
}

TEST(Normalizer, FloatModeAgreesOnSmallInstances) {
  for (const auto& [r, m] : small_instances()) {
    const auto s = build(r, m);
    const SolveOptions f{SolveMode::Float, 1e-9};
    const auto c = centralizer_dimension(s, f);
    EXPECT_TRUE(c.numerical);
    EXPECT_EQ(c.dim, centralizer_dimension(s).dim);
    EXPECT_EQ(normalizer_dimension(s, f).dim, normalizer_dimension(s).dim);
  }
}

// Second route: stack the conditions explicitly and take a plain rank.
TEST(Normalizer, DualRouteAgrees) {
  for (const auto& [r, m] : std::vector<Instance>{{3, Multiplicities::single(1)},
                                                   {3, Multiplicities::single(2)},
                                                   {4, Multiplicities::pair(1, 1)},
                                                   {4, Multiplicities::pair(1, 0)},
                                                   {5, Multiplicities::single(1)},
                                                   {6, Multiplicities::single(1)},
                                                   {7, Multiplicities::single(1)}}) {
    const auto s = build(r, m);
    const std::size_t p = antisym_dim(s.dim());
    EXPECT_EQ(p - rank(centralizer_conditions(s)), centralizer_dimension(s).dim) << "r=" << r;
    EXPECT_EQ(p - rank(normalizer_conditions(s)), normalizer_dimension(s).dim) << "r=" << r;
    EXPECT_EQ(nullspace_basis(centralizer_conditions(s)).size(), centralizer_dimension(s).dim);
  }
}

// Third route, joint unknowns (X, α), independent of the library solver.
TEST(Normalizer, JointFormulationOracleAgrees) {
  for (const auto& [r, m] : std::vector<Instance>{{3, Multiplicities::single(1)},
                                                   {3, Multiplicities::single(2)},
                                                   {4, Multiplicities::pair(1, 1)},
                                                   {4, Multiplicities::pair(0, 1)},
                                                   {5, Multiplicities::single(1)},
                                                   {6, Multiplicities::single(1)}}) {
    const auto s = build(r, m);
    const auto g = dense_gens(s);
    EXPECT_EQ(oracle::centralizer_dim(g), centralizer_dimension(s).dim) << "r=" << r;
    EXPECT_EQ(oracle::normalizer_dim(g), normalizer_dimension(s).dim) << "r=" << r;
  }
}

TEST(NormalizerProperty, BasesSatisfyTheirDefinitions) {
  for (const auto& [r, m] : small_instances()) {
    if (ambient_dimension(r, m) > 16) continue;
    const auto s = build(r, m);
    const auto& js = s.generators();
    const auto cent = centralizer_basis(s);
    for (const auto& x : cent.elements())
      for (const auto& j : js) EXPECT_TRUE(commutator(x, j).is_zero());

    const auto norm = normalizer_basis(s);
    const SubalgebraBasis span(s.dim(), std::vector<Matrix>(js.begin(), js.end()));
    for (const auto& x : norm.elements())
      for (const auto& j : js) EXPECT_TRUE(span.contains(commutator(x, j)));

    // span{J} ⊆ N, C ⊆ N, C ∩ span{J} = 0
    for (const auto& j : js) EXPECT_TRUE(norm.contains(j));
    for (const auto& x : cent.elements()) EXPECT_TRUE(norm.contains(x));
    std::vector<Matrix> both = cent.elements();
    both.insert(both.end(), js.begin(), js.end());
    EXPECT_EQ(span_dim(both), cent.size() + js.size()) << "r=" << r;
    EXPECT_EQ(norm.size(), cent.size() + js.size());
  }
}

TEST(NormalizerProperty, CentralizerClosedUnderBracket) {
  for (const auto& [r, m] : small_instances()) {
    if (ambient_dimension(r, m) > 16) continue;
    const auto cent = centralizer_basis(build(r, m));
    for (std::size_t a = 0; a < cent.size(); ++a)
      for (std::size_t b = a + 1; b < cent.size(); ++b) EXPECT_TRUE(cent.contains(commutator(cent[a], cent[b])));
  }
}

TEST(NormalizerProperty, IsotropyIdentity) {
  for (int r = 3; r <= 17; ++r)
    for (long a = 0; a <= 12; ++a)
      for (long b = 0; b <= (r % 4 == 0 ? 12 : 0); ++b) {
        if (r % 4 != 0 && a == 0) continue;
        if (r % 4 == 0 && a + b == 0) continue;
        const auto m = r % 4 == 0 ? Multiplicities::pair(a, b) : Multiplicities::single(a);
        EXPECT_EQ(d_max(r, m) - static_cast<Dim>(ambient_dimension(r, m)), static_cast<Dim>(isotropy_dim(r, m)));
        EXPECT_EQ(static_cast<Dim>(expected_dims(r, m).centralizer), d_C(r, m));
      }
}

// Inputs that are not valid structures still go through the same equations;
// the fast route and the explicit stack must agree on them too.
TEST(Normalizer, RoutesAgreeOnPerturbedInput) {
  const auto s = build(3, Multiplicities::single(2));
  const Matrix p = Matrix::from_triplets(8, 8, {{0, 1, 1}, {1, 0, 1}, {2, 2, 1}, {3, 3, -1},
                                                {4, 5, 1}, {5, 4, 1}, {6, 6, 1}, {7, 7, 1}});
  for (const auto& bad : {s.with_generator({1, 2}, s.generator(1, 3)), s.with_generator({2, 3}, p)}) {
    const std::size_t dim = antisym_dim(bad.dim());
    EXPECT_EQ(dim - rank(centralizer_conditions(bad)), centralizer_dimension(bad).dim);
    EXPECT_EQ(dim - rank(normalizer_conditions(bad)), normalizer_dimension(bad).dim);
    EXPECT_EQ(oracle::centralizer_dim(dense_gens(bad)), centralizer_dimension(bad).dim);
  }
}
