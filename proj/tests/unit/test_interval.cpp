#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "exact.hpp"
#include "threeway/error.hpp"
#include "threeway/interval.hpp"
#include "threeway/oracle.hpp"

namespace threeway {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no threeway::Error thrown";
  return ErrorKind::MissingInput;
}

TEST(Interval, MakeKeepsBounds) {
  const Interval iv = make_interval(0.1, 0.2);
  EXPECT_EQ(iv.lo(), 0.1);
  EXPECT_EQ(iv.hi(), 0.2);
  EXPECT_FALSE(iv.degenerate());

  const Interval point = make_interval(0.3, 0.3);
  EXPECT_TRUE(point.degenerate());
  EXPECT_EQ(point.width(), 0.0);
}

TEST(Interval, RejectsInvertedBounds) {
  EXPECT_EQ(kind_of([] { make_interval(0.8, 0.1); }), ErrorKind::InvertedBounds);
}

TEST(Interval, RoleChecks) {
  EXPECT_EQ(kind_of([] { Interval::make(-0.1, 0.5, IntervalRole::Membership); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { Interval::make(0.5, 1.1, IntervalRole::Membership); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { Interval::make(-1.0, 2.0, IntervalRole::Loss); }), ErrorKind::OutOfRange);
  EXPECT_NO_THROW(Interval::make(0.0, 1.0, IntervalRole::Membership));
  EXPECT_NO_THROW(Interval::make(-3.0, -1.0));
}

TEST(Interval, RejectsNaN) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(make_interval(nan, 1.0), Error);
  EXPECT_THROW(make_interval(0.0, nan), Error);
}

TEST(Theta, Range) {
  EXPECT_EQ(Theta().value(), 0.5);
  EXPECT_NO_THROW(Theta(0.0));
  EXPECT_NO_THROW(Theta(1.0));
  EXPECT_EQ(kind_of([] { Theta(1.5); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { Theta(-0.1); }), ErrorKind::OutOfRange);
  EXPECT_THROW(Theta(std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST(MTheta, WorkedValues) {
  // 0.1 + 0.2 halves to an exact rounding tie; the correctly rounded result
  // is the double just above 0.15.
  const double m1 = m_theta(make_interval(0.1, 0.2), Theta(0.5));
  EXPECT_EQ(m1, exact_m_theta(0.1, 0.2, 0.5));
  EXPECT_EQ(m1, std::nextafter(0.15, 1.0));

  EXPECT_EQ(m_theta(make_interval(0.15, 0.25), Theta(0.5)), 0.2);
}

TEST(MTheta, DegenerateIsIdentity) {
  for (double x : {0.0, 0.1, 0.3, 0.7, 1.0}) {
    for (double t : {0.0, 0.25, 0.5, 0.9, 1.0}) EXPECT_EQ(m_theta(make_interval(x, x), Theta(t)), x);
  }
}

TEST(MTheta, EndpointsAtThetaZeroAndOne) {
  const Interval iv = make_interval(0.2, 0.6);
  EXPECT_EQ(m_theta(iv, Theta(0.0)), 0.2);
  EXPECT_EQ(m_theta(iv, Theta(1.0)), 0.6);
}

TEST(MTheta, CorrectlyRoundedAtHalf) {
  oracle::CaseGenerator gen(7);
  for (int i = 0; i < 20000; ++i) {
    double a = gen.unit(), b = gen.unit();
    if (a > b) std::swap(a, b);
    ASSERT_EQ(m_theta(make_interval(a, b), Theta(0.5)), exact_m_theta(a, b, 0.5)) << a << " " << b;
  }
}

TEST(MTheta, WithinTwoUlpsAndInsideInterval) {
  oracle::CaseGenerator gen(8);
  for (int i = 0; i < 20000; ++i) {
    double a = gen.unit(), b = gen.unit();
    if (a > b) std::swap(a, b);
    const double t = gen.unit();
    const double m = m_theta(make_interval(a, b), Theta(t));
    const double ref = exact_m_theta(a, b, t);
    ASSERT_GE(m, a);
    ASSERT_LE(m, b);
    const double ulp = std::nextafter(ref, 2.0) - ref;
    ASSERT_LE(std::abs(m - ref), 2 * ulp) << a << " " << b << " " << t;
  }
}

TEST(MTheta, MonotoneInTheta) {
  const Interval iv = make_interval(0.1, 0.8);
  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double m = m_theta(iv, Theta(i / 100.0));
    EXPECT_GE(m, prev);
    prev = m;
  }
}

TEST(Scale, WorkedValues) {
  EXPECT_EQ(scale(make_interval(1, 2), 0.3), make_interval(0.3, 0.6));
  const Interval r = scale(make_interval(5, 6), 0.7);
  EXPECT_DOUBLE_EQ(r.lo(), 3.5);
  EXPECT_DOUBLE_EQ(r.hi(), 4.2);
  EXPECT_EQ(scale(make_interval(3, 4), 0.0), make_interval(0, 0));
}

TEST(Scale, RejectsNegative) {
  EXPECT_EQ(kind_of([] { scale(make_interval(1, 2), -0.5); }), ErrorKind::NegativeScale);
}

TEST(PossibilityDegree, WorkedValues) {
  EXPECT_EQ(possibility_degree(make_interval(0.3, 0.6), make_interval(3.5, 4.2)).value(), 0.0);
  EXPECT_EQ(possibility_degree(make_interval(3.5, 4.2), make_interval(0.6, 0.8)).value(), 1.0);
  EXPECT_EQ(possibility_degree(make_interval(0.4, 0.8), make_interval(0.3, 0.4)).value(), 1.0);
  const Interval x = make_interval(0.2, 0.9);
  EXPECT_EQ(possibility_degree(x, x).value(), 0.5);
}

TEST(PossibilityDegree, PartialOverlap) {
  // (2 - 1) / (2 + 2) = 0.25 of the way, so p = 0.75.
  EXPECT_DOUBLE_EQ(possibility_degree(make_interval(1, 3), make_interval(0, 2)).value(), 0.75);
  EXPECT_DOUBLE_EQ(possibility_degree(make_interval(0, 2), make_interval(1, 3)).value(), 0.25);
}

TEST(PossibilityDegree, DegeneratePairs) {
  const Interval a = Interval::point(1.0), b = Interval::point(2.0);
  EXPECT_EQ(possibility_degree(a, b).value(), 0.0);
  EXPECT_EQ(possibility_degree(b, a).value(), 1.0);
  EXPECT_EQ(possibility_degree(a, a).value(), 0.5);
  // One degenerate side still has a positive spread.
  EXPECT_EQ(possibility_degree(Interval::point(1.5), make_interval(1, 2)).value(), 0.5);
}

TEST(PossibilityDegree, MatchesPiecewiseReferenceAndComplements) {
  oracle::CaseGenerator gen(11);
  for (int i = 0; i < 20000; ++i) {
    const auto draw = [&] {
      const double lo = gen.uniform(0, 5);
      return make_interval(lo, gen.chance(0.2) ? lo : lo + gen.uniform(0, 3));
    };
    const Interval x = draw(), y = draw();
    const double p = possibility_degree(x, y).value();
    const double q = possibility_degree(y, x).value();
    ASSERT_NEAR(p, oracle::reference_possibility(x, y), 1e-15);
    ASSERT_NEAR(p + q, 1.0, 1e-12);
    ASSERT_GE(p, 0.0);
    ASSERT_LE(p, 1.0);
  }
}

TEST(PossibilityDegree, ValueRange) {
  EXPECT_THROW(PossibilityDegree(1.5), Error);
  EXPECT_THROW(PossibilityDegree(-0.5), Error);
  EXPECT_LT(PossibilityDegree(0.2), PossibilityDegree(0.3));
}

}  // namespace
}  // namespace threeway
