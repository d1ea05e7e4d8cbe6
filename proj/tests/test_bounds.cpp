#include <gtest/gtest.h>

#include "evencliff/bounds.hpp"

using namespace evencliff;

namespace {

const auto S = Multiplicities::single;
const auto P = Multiplicities::pair;

bool gap_class(int r) { return r % 8 != 2 && r % 8 != 6; }

// Every compatible multiplicity with entries ≤ bound.
template <class F>
void for_each_mult(int r, long bound, F&& f) {
  if (r % 4 == 0) {
    for (long a = 0; a <= bound; ++a)
      for (long b = 0; b <= bound; ++b)
        if (a + b > 0) f(P(a, b));
  } else {
    for (long m = 1; m <= bound; ++m) f(S(m));
  }
}

}  // namespace

TEST(Bounds, Choose2) {
  EXPECT_EQ(choose2(0), 0);
  EXPECT_EQ(choose2(1), 0);
  EXPECT_EQ(choose2(-3), 0);
  EXPECT_EQ(choose2(9), 36);
}

TEST(Bounds, DmaxExamples) {
  for (long m = 1; m <= 30; ++m) EXPECT_EQ(d_max(3, S(m)), 2 * m * m + 5 * m + 3);
  EXPECT_EQ(d_max(9, S(1)), 52);
  EXPECT_EQ(d_max(10, S(1)), 78);
  EXPECT_EQ(d_max(12, P(1, 0)), 133);
  EXPECT_EQ(d_max(16, P(1, 0)), 248);
  EXPECT_THROW(d_max(8, S(1)), std::invalid_argument);
  EXPECT_THROW(d_max(2, S(1)), std::invalid_argument);
}

TEST(Bounds, GapThresholdExamples) {
  EXPECT_EQ(gap_threshold(3, S(1)), 7);
  EXPECT_EQ(gap_threshold(9, S(1)), 16);
  for (int r = 3; r <= 17; ++r)
    for_each_mult(r, 5, [&](const Multiplicities& m) { EXPECT_LT(gap_threshold(r, m), d_max(r, m)); });
}

TEST(Bounds, ConstraintsExamples) {
  EXPECT_TRUE(constraints_ok(3, S(2)));
  EXPECT_FALSE(constraints_ok(7, S(22)));
  EXPECT_TRUE(constraints_ok(7, S(24)));
  EXPECT_FALSE(constraints_ok(7, S(23)));  // odd
  EXPECT_EQ(constraint_threshold(3), Rational(7, 4));
  EXPECT_EQ(constraint_threshold(6), Rational(8));  // 15/2 + 1/2
  // r ≡ 2: m > 1/2 + 1/2 = 1 and even
  EXPECT_FALSE(constraints_ok(2 + 8, S(1)));
  EXPECT_TRUE(constraints_ok(10, S(24)));
  EXPECT_FALSE(constraints_ok(10, S(23)));
  // min(m1, m2) for pairs
  EXPECT_FALSE(constraints_ok(4, P(10, 2)));
  EXPECT_TRUE(constraints_ok(4, P(10, 3)));
  EXPECT_FALSE(constraints_ok(8, P(30, 28)));
  EXPECT_TRUE(constraints_ok(8, P(30, 30)));
  EXPECT_FALSE(constraints_ok(8, P(31, 30)));
}

TEST(Bounds, CentralizerAndSubalgebraExamples) {
  EXPECT_EQ(d_C(3, S(2)), 10);
  EXPECT_EQ(d_M(3, S(2)), 6);
  EXPECT_EQ(d_C(7, S(24)), 276);
  EXPECT_EQ(d_M(7, S(24)), 253);
  EXPECT_FALSE(d_M(6, S(4)).has_value());
  EXPECT_THROW(gap_inequality_holds(6, S(4)), std::domain_error);
}

TEST(Bounds, GapInequalityExamples) {
  EXPECT_TRUE(gap_inequality_holds(3, S(2)));
  EXPECT_FALSE(gap_inequality_holds(3, S(1)));
  EXPECT_FALSE(constraints_ok(3, S(1)));
  EXPECT_TRUE(gap_inequality_holds(7, S(24)));
}

TEST(Bounds, ReportFields) {
  const auto rep = bounds_report(9, S(1));
  EXPECT_EQ(rep.n, 16);
  EXPECT_EQ(rep.d_max, 52);
  EXPECT_EQ(rep.gap_threshold, 16);
  const auto six = bounds_report(6, S(4));
  EXPECT_FALSE(six.d_M.has_value());
  EXPECT_FALSE(six.gap_inequality_ok.has_value());
  EXPECT_FALSE(six.d_M_reason.empty());
  EXPECT_THROW(bounds_report(2, S(1)), std::invalid_argument);
}

TEST(BoundsProperty, ConstraintsImplyGap) {
  for (int r = 3; r <= 17; ++r) {
    if (!gap_class(r)) continue;
    for_each_mult(r, 200, [&](const Multiplicities& m) {
      if (constraints_ok(r, m)) EXPECT_TRUE(gap_inequality_holds(r, m)) << "r=" << r << " m=" << m.to_string();
    });
  }
}

// For r ≡ ±1 and r ≡ 3, 5 the inequality itself flips at the threshold, parity aside.
TEST(BoundsProperty, FlipsExactlyAtThreshold) {
  for (int r = 3; r <= 17; ++r) {
    const int c = r % 8;
    if (c != 1 && c != 7 && c != 3 && c != 5) continue;
    const Rational t = constraint_threshold(r);
    for (long m = 1; m <= 200; ++m) {
      EXPECT_EQ(gap_inequality_holds(r, S(m)), Rational(m) > t) << "r=" << r << " m=" << m;
      const Dim margin = d_C(r, S(m)) - *d_M(r, S(m)) - choose2(r);
      EXPECT_EQ(margin, (c == 1 || c == 7) ? m - 1 - choose2(r) : 4 * m - 4 - choose2(r));
    }
  }
}

TEST(BoundsProperty, DmaxDecomposes) {
  for (int r = 3; r <= 17; ++r)
    for_each_mult(r, 50, [&](const Multiplicities& m) {
      const Dim n = static_cast<Dim>(ambient_dimension(r, m));
      EXPECT_EQ(d_max(r, m), n + d_C(r, m) + choose2(r)) << "r=" << r << " m=" << m.to_string();
    });
}

TEST(BoundsProperty, RankFourAdditivity) {
  for (long a = 1; a <= 30; ++a)
    for (long b = 1; b <= 30; ++b) EXPECT_EQ(d_max(4, P(a, b)), d_max(3, S(a)) + d_max(3, S(b)));
}
