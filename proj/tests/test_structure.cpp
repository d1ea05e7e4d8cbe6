#include <gtest/gtest.h>

#include "evencliff/linalg.hpp"
#include "evencliff/structure.hpp"

using namespace evencliff;

namespace {

std::vector<Multiplicities> mults_up_to(int r, long total) {
  std::vector<Multiplicities> out;
  if (r % 4 == 0) {
    for (long a = 0; a <= total; ++a)
      for (long b = 0; a + b <= total; ++b)
        if (a + b > 0) out.push_back(Multiplicities::pair(a, b));
  } else {
    for (long m = 1; m <= total; ++m) out.push_back(Multiplicities::single(m));
  }
  return out;
}

const CheckResult& find_check(const VerifyReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST(Multiplicities, ParseAndCompat) {
  EXPECT_EQ(Multiplicities::pair(1, 2).to_string(), "1,2");
  EXPECT_EQ(Multiplicities::single(3).to_string(), "3");
  EXPECT_THROW(Multiplicities::pair(1, 2).m(), std::logic_error);
  EXPECT_THROW(require_compatible(8, Multiplicities::single(1)), std::invalid_argument);
  EXPECT_THROW(require_compatible(5, Multiplicities::pair(1, 1)), std::invalid_argument);
  EXPECT_THROW(require_compatible(5, Multiplicities::single(0)), std::invalid_argument);
  EXPECT_THROW(require_compatible(4, Multiplicities::pair(0, 0)), std::invalid_argument);
  EXPECT_THROW(require_compatible(4, Multiplicities::pair(-1, 2)), std::invalid_argument);
  EXPECT_NO_THROW(require_compatible(4, Multiplicities::pair(0, 2)));
  try {
    require_compatible(8, Multiplicities::single(1));
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("0 mod 4"), std::string::npos);
  }
}

TEST(Structure, AmbientDimension) {
  EXPECT_EQ(ambient_dimension(3, Multiplicities::single(2)), 8u);
  EXPECT_EQ(ambient_dimension(9, Multiplicities::single(1)), 16u);
  EXPECT_EQ(ambient_dimension(16, Multiplicities::pair(1, 0)), 128u);
  EXPECT_EQ(ambient_dimension(4, Multiplicities::pair(2, 1)), 12u);
}

TEST(Structure, BuildAndVerifyAllSmall) {
  for (int r = 2; r <= 10; ++r)
    for (const auto& m : mults_up_to(r, 3)) {
      const auto s = build(r, m);
      EXPECT_EQ(s.dim(), ambient_dimension(r, m));
      const auto rep = verify(s);
      ASSERT_EQ(rep.checks.size(), 4u);
      EXPECT_TRUE(rep.all_passed()) << "r=" << r << " mult=" << m.to_string();
    }
}

TEST(Structure, SpanDimensionCornerCase) {
  // spin(4) = sp(1) ⊕ sp(1); with one half absent only one factor acts
  EXPECT_EQ(spin_image_dim(4, Multiplicities::pair(2, 0)), 3u);
  EXPECT_EQ(spin_image_dim(4, Multiplicities::pair(1, 1)), 6u);
  const auto s = build(4, Multiplicities::pair(0, 1));
  EXPECT_EQ(span_dim(s.generators()), 3u);
  EXPECT_TRUE(verify(s).all_passed());
}

TEST(Structure, CorruptedGeneratorIsCaught) {
  const auto s = build(5, Multiplicities::single(1));
  // symmetric matrix: breaks antisymmetry and the square
  const auto bad = s.with_generator({1, 2}, Matrix::identity(s.dim()));
  const auto rep = verify(bad);
  EXPECT_FALSE(rep.all_passed());
  EXPECT_FALSE(find_check(rep, "antisymmetric").passed);
  EXPECT_FALSE(find_check(rep, "square_is_minus_identity").passed);
  EXPECT_FALSE(find_check(rep, "bracket_table").passed);

  // a valid almost complex structure in the wrong place breaks only the bracket table / span
  const auto swapped = s.with_generator({1, 2}, s.generator(1, 3));
  const auto rep2 = verify(swapped);
  EXPECT_TRUE(find_check(rep2, "antisymmetric").passed);
  EXPECT_TRUE(find_check(rep2, "square_is_minus_identity").passed);
  EXPECT_FALSE(find_check(rep2, "bracket_table").passed);
  EXPECT_FALSE(find_check(rep2, "span_dimension").passed);
}

TEST(Structure, ShapeChecked) {
  EXPECT_THROW(EvenCliffordStructure(3, Multiplicities::single(1), {}), std::invalid_argument);
  const auto s = build(3, Multiplicities::single(1));
  EXPECT_THROW(s.with_generator({1, 2}, Matrix::identity(5)), std::invalid_argument);
}

TEST(Structure, QuaternionicSplit) {
  for (const auto& m : {Multiplicities::pair(1, 1), Multiplicities::pair(2, 1), Multiplicities::pair(1, 2)}) {
    const auto s = build(4, m);
    const auto q = r4_quaternionic_split(s);
    EXPECT_NE(q.plus_support, q.minus_support);
    for (const auto* triple : {&q.plus, &q.minus}) {
      const std::size_t on = triple == &q.plus ? q.plus_support : q.minus_support;
      const std::size_t off = 1 - on;
      const Matrix minus_id = -Matrix::identity(q.block_size[on]);
      for (const auto& x : *triple) {
        EXPECT_TRUE(x.block(q.block_offset[off], q.block_size[off]).is_zero());
        const Matrix b = x.block(q.block_offset[on], q.block_size[on]);
        EXPECT_EQ(b * b, minus_id);
      }
    }
  }
  EXPECT_THROW(r4_quaternionic_split(build(4, Multiplicities::pair(1, 0))), std::invalid_argument);
  EXPECT_THROW(r4_quaternionic_split(build(5, Multiplicities::single(1))), std::invalid_argument);
}
