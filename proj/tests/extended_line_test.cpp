#include <gtest/gtest.h>

#include <set>

#include "moebius/formal_product.hpp"
#include "moebius/l4_point.hpp"

namespace moebius {
namespace {

Magnitude q(long p, long r = 1) { return Magnitude::from_rational(Rational(p, r)); }
Magnitude inf() { return Magnitude::infinity(Scale::multiplicative); }
Magnitude zero() { return Magnitude::zero(Scale::multiplicative); }

TEST(ExtReal, OppositeInfinitiesHaveNoSum) {
  EXPECT_FALSE(checked_add(ExtReal::pos_infinity(), ExtReal::neg_infinity()).has_value());
  EXPECT_THROW(ExtReal::pos_infinity() + ExtReal::neg_infinity(), UndefinedValueError);
  EXPECT_EQ(*checked_add(ExtReal::pos_infinity(), ExtReal(Rational(-7, 3))),
            ExtReal::pos_infinity());
  EXPECT_EQ(*checked_add(ExtReal(Rational(1, 2)), ExtReal(Rational(1, 3))),
            ExtReal(Rational(5, 6)));
}

TEST(ExtReal, OrderAndText) {
  EXPECT_LT(ExtReal::neg_infinity(), ExtReal(-1000000L));
  EXPECT_LT(ExtReal(1000000L), ExtReal::pos_infinity());
  EXPECT_EQ(ExtReal::parse("-inf"), ExtReal::neg_infinity());
  EXPECT_EQ(ExtReal::parse("6/8").to_string(), "3/4");
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
}

TEST(ExtReal, UnreducedRationalsCompareEqual) {
  EXPECT_EQ(ExtReal(Rational(6, 8)), ExtReal(Rational(3, 4)));
}

TEST(Magnitude, BackingsDoNotMix) {
  const Magnitude m = q(2);
  const Magnitude l = Magnitude::from_log(ExtReal(1L));
  EXPECT_THROW((void)(m < l), ScaleMismatchError);
  EXPECT_THROW(m.times(l), ScaleMismatchError);
  EXPECT_NE(m, l);
}

TEST(Magnitude, ZeroTimesInfinityIsUndefined) {
  EXPECT_FALSE(zero().checked_times(inf()).has_value());
  EXPECT_THROW(zero().times(inf()), UndefinedValueError);
  EXPECT_TRUE(q(3).times(inf()).is_infinite());
  EXPECT_EQ(q(3, 4).reciprocal(), q(4, 3));
  EXPECT_TRUE(zero().reciprocal().is_infinite());
  EXPECT_THROW(Magnitude::from_rational(-1), InputError);
}

TEST(Magnitude, LogBackingIsExact) {
  const Magnitude a = Magnitude::from_log(ExtReal(Rational(1, 3)));
  const Magnitude b = Magnitude::from_log(ExtReal(Rational(-1, 3)));
  EXPECT_TRUE(a.times(b).is_one());
  EXPECT_TRUE(Magnitude::from_log(ExtReal::neg_infinity()).is_zero());
  EXPECT_EQ(midpoint(a, b), Magnitude::one(Scale::logarithmic));
}

TEST(FormalProduct, InfiniteFactorsCancel) {
  FormalProduct p(Scale::multiplicative);
  p.multiply(q(3)).multiply(inf()).divide(inf()).divide(q(2));
  EXPECT_EQ(p.order(), 0);
  EXPECT_EQ(p.value(), q(3, 2));

  FormalProduct z(Scale::multiplicative);
  z.multiply(zero()).divide(q(5));
  EXPECT_TRUE(z.value().is_zero());

  FormalProduct w(Scale::multiplicative);
  w.multiply(inf()).multiply(inf()).divide(inf());
  EXPECT_TRUE(w.value().is_infinite());
}

TEST(L4Point, RegularAndDegenerate) {
  const L4Point p = L4Point::make(q(9, 7), q(7, 2), q(2, 9));
  EXPECT_TRUE(p.is_regular());
  EXPECT_EQ(L4Point::make(q(1), inf(), zero()).kind(), L4Kind::A);
  EXPECT_EQ(L4Point::make(zero(), q(1), inf()).kind(), L4Kind::B);
  EXPECT_EQ(L4Point::make(inf(), zero(), q(1)).kind(), L4Kind::C);
  EXPECT_THROW(L4Point::make(q(2), q(2), q(2)), InputError);
  EXPECT_THROW(L4Point::make(q(2), inf(), zero()), InputError);
}

TEST(L4Point, LogPatterns) {
  const Triple a = pinned_pattern(L4Kind::A, Scale::logarithmic);
  EXPECT_EQ(a[0].stored(), ExtReal(0L));
  EXPECT_TRUE(a[1].stored().is_pos_inf());
  EXPECT_TRUE(a[2].stored().is_neg_inf());
  EXPECT_EQ(classify(a), L4Kind::A);
}

TEST(SignedPermute, ReciprocalThenSwap) {
  const L4Point p = L4Point::make(q(9, 7), q(7, 2), q(2, 9));
  const L4Point r = signed_permute(Perm3::parse("132"), -1, p);
  EXPECT_EQ(r, L4Point::make(q(7, 9), q(9, 2), q(2, 7)));
}

TEST(SignedPermute, DegenerateAToC) {
  const L4Point a = L4Point::degenerate(L4Kind::A, Scale::multiplicative);
  EXPECT_EQ(signed_permute(Perm3::parse("321"), -1, a).kind(), L4Kind::C);
}

class SignedAction : public ::testing::TestWithParam<Scale> {};

std::vector<L4Point> sample_points(Scale scale) {
  std::vector<L4Point> out;
  for (auto kind : {L4Kind::A, L4Kind::B, L4Kind::C}) {
    out.push_back(L4Point::degenerate(kind, scale));
  }
  if (scale == Scale::multiplicative) {
    out.push_back(L4Point::make(q(9, 7), q(7, 2), q(2, 9)));
    out.push_back(L4Point::make(q(1), q(1), q(1)));
    out.push_back(L4Point::make(q(5), q(1, 3), q(3, 5)));
  } else {
    auto lg = [](long p, long r) { return Magnitude::from_log(ExtReal(Rational(p, r))); };
    out.push_back(L4Point::make(lg(1, 2), lg(-3, 4), lg(1, 4)));
    out.push_back(L4Point::make(lg(2, 1), lg(0, 1), lg(-2, 1)));
  }
  return out;
}

TEST_P(SignedAction, ClosedAndComposes) {
  for (const auto& p : sample_points(GetParam())) {
    for (const auto& s1 : Perm3::all()) {
      for (int e1 : {1, -1}) {
        const L4Point once = signed_permute(s1, e1, p);
        EXPECT_EQ(once.is_regular(), p.is_regular());
        for (const auto& s2 : Perm3::all()) {
          for (int e2 : {1, -1}) {
            EXPECT_EQ(signed_permute(s2, e2, once), signed_permute(s2 * s1, e1 * e2, p));
          }
        }
      }
    }
  }
}

TEST_P(SignedAction, DegeneratePointsFormOneOrbit) {
  const L4Point a = L4Point::degenerate(L4Kind::A, GetParam());
  std::set<L4Kind> orbit;
  for (const auto& s : Perm3::all()) {
    for (int e : {1, -1}) {
      orbit.insert(signed_permute(s, e, a).kind());
    }
  }
  EXPECT_EQ(orbit, (std::set<L4Kind>{L4Kind::A, L4Kind::B, L4Kind::C}));
}

INSTANTIATE_TEST_SUITE_P(Backings, SignedAction,
                         ::testing::Values(Scale::multiplicative, Scale::logarithmic));

}  // namespace
}  // namespace moebius
