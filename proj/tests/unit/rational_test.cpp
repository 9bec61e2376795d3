#include <gtest/gtest.h>

#include "schmidt/errors.hpp"
#include "schmidt/rational.hpp"
#include "test_support.hpp"

namespace schmidt {
namespace {

using testing::Q;

TEST(Rational, ToStringAlwaysHasDenominator) {
  EXPECT_EQ(to_string(Q(3)), "3/1");
  EXPECT_EQ(to_string(Q(0)), "0/1");
  EXPECT_EQ(to_string(Q(-6, 4)), "-3/2");
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("5/1889568"), Q(5, 1889568));
  EXPECT_EQ(parse_rational("-7"), Q(-7));
  EXPECT_EQ(parse_rational("-2.25"), Q(-9, 4));
  EXPECT_EQ(parse_rational("1e-3"), Q(1, 1000));
  EXPECT_EQ(parse_rational("2.5E2"), Q(250));
  EXPECT_EQ(parse_rational(" 3/6 "), Q(1, 2));
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("abc"), InvalidArgument);
  EXPECT_THROW(parse_rational(""), InvalidArgument);
}

TEST(Rational, FloorCeilRound) {
  EXPECT_EQ(floor(Q(-7, 2)), -4);
  EXPECT_EQ(ceil(Q(-7, 2)), -3);
  EXPECT_EQ(floor(Q(7, 2)), 3);
  EXPECT_EQ(ceil(Q(7, 2)), 4);
  EXPECT_EQ(round_half_even(Q(5, 2)), 2);
  EXPECT_EQ(round_half_even(Q(7, 2)), 4);
  EXPECT_EQ(round_half_even(Q(-5, 2)), -2);
  EXPECT_EQ(round_half_even(Q(6, 5)), 1);
}

TEST(Rational, Powers) {
  EXPECT_EQ(pow(Q(1, 8), 3), Q(1, 512));
  EXPECT_EQ(pow(Q(2, 3), 0), Q(1));
  EXPECT_EQ(pow(Integer(3), 10), Integer(59049));
}

TEST(Rational, SquareRootBounds) {
  EXPECT_EQ(isqrt(Integer(0)), 0);
  EXPECT_EQ(isqrt(Integer(99)), 9);
  EXPECT_EQ(isqrt(Integer(100)), 10);
  for (long long z : {2LL, 3LL, 5LL, 169LL, 974169LL, 123456789LL}) {
    const Rational up = sqrt_upper(Integer(z));
    const Rational lo = sqrt_lower(Q(z));
    EXPECT_GE(up * up, Q(z));
    EXPECT_LE(lo * lo, Q(z));
    EXPECT_LT(up - lo, Q(1, 1LL << 40));
  }
  EXPECT_EQ(sqrt_upper(Integer(169)), Q(13));
}

TEST(Rational, CompareWithSqrtIsExact) {
  // 7/5 vs sqrt(2): 49/25 = 1.96 < 2.
  EXPECT_EQ(compare_with_sqrt(Q(7, 5), Q(1), Q(2)), -1);
  EXPECT_EQ(compare_with_sqrt(Q(3, 2), Q(1), Q(2)), 1);
  EXPECT_EQ(compare_with_sqrt(Q(3), Q(1), Q(9)), 0);
  EXPECT_EQ(compare_with_sqrt(Q(-1), Q(1), Q(2)), -1);
  EXPECT_EQ(compare_with_sqrt(Q(-1), Q(-1), Q(2)), 1);
  EXPECT_EQ(compare_with_sqrt(Q(-2), Q(-1), Q(2)), -1);
  EXPECT_EQ(compare_with_sqrt(Q(0), Q(5), Q(0)), 0);
  EXPECT_THROW(compare_with_sqrt(Q(1), Q(1), Q(-1)), InvalidArgument);
}

TEST(Rational, VectorOps) {
  using testing::P;
  using testing::U;
  EXPECT_EQ(dot(U({3, 4}), P({Q(1), Q(1)})), Q(7));
  EXPECT_EQ(norm_sq(U({3, 4})), 25);
  EXPECT_EQ(P({Q(1), Q(2)}) + P({Q(1, 2), Q(-1)}), P({Q(3, 2), Q(1)}));
  EXPECT_EQ(Q(2) * P({Q(1, 2), Q(1, 3)}), P({Q(1), Q(2, 3)}));
  EXPECT_THROW(dot(P({Q(1)}), P({Q(1), Q(2)})), DimensionMismatch);
  EXPECT_TRUE(lex_positive(U({0, 2, -1})));
  EXPECT_FALSE(lex_positive(U({0, -2, 1})));
  EXPECT_TRUE(lex_less(P({Q(0), Q(1)}), P({Q(0), Q(2)})));
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(from_double(0.5), Q(1, 2));
  EXPECT_EQ(from_double(-3.0), Q(-3));
  EXPECT_EQ(from_double(0.1), Rational(Integer(3602879701896397LL), Integer(1) << 55));
}

}  // namespace
}  // namespace schmidt
