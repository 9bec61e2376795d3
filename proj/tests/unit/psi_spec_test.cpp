#include <gtest/gtest.h>

#include "schmidt/errors.hpp"
#include "schmidt/psi_spec.hpp"
#include "test_support.hpp"

namespace schmidt {
namespace {

using testing::Q;

TEST(PowerLaw, Parse) {
  const PowerLaw p = parse_power_law("power:c=1,sigma=1");
  EXPECT_EQ(p.c, Q(1));
  EXPECT_EQ(p.sigma, Q(1));
  const PowerLaw h = parse_power_law("power:sigma=1/2,c=3/2");
  EXPECT_EQ(h.c, Q(3, 2));
  EXPECT_EQ(h.sigma, Q(1, 2));
  EXPECT_THROW(parse_power_law("table:c=1"), InvalidArgument);
  EXPECT_THROW(parse_power_law("power:c=1,tau=2"), InvalidArgument);
  EXPECT_THROW(parse_power_law("power:c=0,sigma=1"), InvalidArgument);
}

TEST(PowerLaw, BoundsAreExact) {
  const PsiSpec inv_t = PowerLaw{Q(1), Q(1)};
  EXPECT_TRUE(psi_bounds(inv_t, Integer(4), Q(1, 4)));
  EXPECT_FALSE(psi_bounds(inv_t, Integer(4), Q(26, 100)));
  // psi(t) = t^(-1/2): psi(9) = 1/3.
  const PsiSpec root = PowerLaw{Q(1), Q(1, 2)};
  EXPECT_TRUE(psi_bounds(root, Integer(9), Q(1, 3)));
  EXPECT_FALSE(psi_bounds(root, Integer(9), Q(1, 3) + Q(1, 1000000)));
  EXPECT_TRUE(psi_bounds(root, Integer(8), Q(1, 3) + Q(1, 1000000)));
  EXPECT_TRUE(covers(root, Integer(1000000)));
}

TEST(PsiTable, StepConvention) {
  const PsiSpec table = PsiTable{{{Integer(2), Q(1, 2)}, {Integer(5), Q(1, 5)}, {Integer(10), Q(1, 10)}}};
  EXPECT_NO_THROW(validate(table));
  EXPECT_TRUE(psi_bounds(table, Integer(1), Q(1, 2)));  // below the first abscissa
  EXPECT_TRUE(psi_bounds(table, Integer(4), Q(1, 2)));
  EXPECT_FALSE(psi_bounds(table, Integer(5), Q(1, 2)));
  EXPECT_TRUE(psi_bounds(table, Integer(9), Q(1, 5)));
  EXPECT_TRUE(covers(table, Integer(10)));
  EXPECT_FALSE(covers(table, Integer(11)));
}

TEST(PsiTable, Validation) {
  EXPECT_THROW(validate(PsiSpec{PsiTable{}}), InvalidArgument);
  EXPECT_THROW(validate(PsiSpec{PsiTable{{{Integer(2), Q(1, 2)}, {Integer(2), Q(1, 3)}}}}), InvalidArgument);
  EXPECT_THROW(validate(PsiSpec{PsiTable{{{Integer(2), Q(1, 3)}, {Integer(3), Q(1, 2)}}}}), InvalidArgument);
  EXPECT_THROW(validate(PsiSpec{PsiTable{{{Integer(2), Q(0)}}}}), InvalidArgument);
}

}  // namespace
}  // namespace schmidt
