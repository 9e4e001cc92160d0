#include <gtest/gtest.h>

#include "bcjq/cyclo.hpp"
#include "bcjq/error.hpp"

namespace bcjq {
namespace {

const Rational kHalf(Integer(1), Integer(2));

TEST(Cyclo, Addition) {
  EXPECT_EQ(Cyclo(1) + Cyclo::omega(), Cyclo(Rational(1), Rational(1)));
  EXPECT_EQ(omega1() + omega2(), Cyclo(-1));
  EXPECT_EQ(Cyclo(kHalf, Rational(1)) + Cyclo(kHalf, Rational(-1)), Cyclo(1));
}

TEST(Cyclo, Multiplication) {
  EXPECT_EQ(omega1() * omega2(), Cyclo(1));
  EXPECT_EQ(Cyclo::omega() * Cyclo::omega(), Cyclo(Rational(-1), Rational(-1)));
  EXPECT_EQ(pow(Cyclo::omega(), 3), Cyclo(1));
  // (w1 - w2)^2 = -3
  EXPECT_EQ(pow(omega1() - omega2(), 2), Cyclo(-3));
}

TEST(Cyclo, Inverse) {
  EXPECT_EQ(inverse(Cyclo(1)), Cyclo(1));
  EXPECT_EQ(inverse(omega1()), omega2());
  EXPECT_EQ(inverse(Cyclo(2)), Cyclo(kHalf));
  const Cyclo z(Rational(3), Rational(-5));
  EXPECT_EQ(z * inverse(z), Cyclo(1));
  EXPECT_THROW(inverse(Cyclo(0)), DivisionByZero);
  EXPECT_THROW(Cyclo(1) / Cyclo(0), DivisionByZero);
}

TEST(Cyclo, Powers) {
  EXPECT_EQ(pow(omega1(), 3), Cyclo(1));
  EXPECT_EQ(pow(omega1(), 4), omega1());
  EXPECT_EQ(pow(Cyclo(Rational(7), Rational(-2)), 0), Cyclo(1));
  for (std::uint64_t n = 0; n < 30; ++n) {
    EXPECT_EQ(pow(omega1(), n), pow(omega1(), n % 3));
    EXPECT_EQ(pow(omega2(), n), pow(omega2(), n % 3));
  }
}

TEST(Cyclo, RootsOfCharacteristicCubic) {
  for (const Cyclo& w : {omega1(), omega2(), Cyclo(2)}) {
    EXPECT_EQ(pow(w, 3) - pow(w, 2) - w - Cyclo(2), Cyclo(0)) << to_string(w);
  }
}

TEST(Cyclo, NormAndConjugate) {
  const Cyclo z(Rational(2), Rational(3));
  EXPECT_EQ(z * z.conjugate(), Cyclo(z.norm()));
  EXPECT_EQ(omega1().conjugate(), omega2());
}

TEST(Cyclo, Projection) {
  EXPECT_EQ(project_rational(Cyclo(Rational(5))), Rational(5));
  EXPECT_THROW(project_rational(omega1()), ProjectionError);
}

TEST(Cyclo, Rendering) {
  EXPECT_EQ(to_string(Cyclo(Rational(7), Rational(14))), "7 + 14*w");
  EXPECT_EQ(to_string(omega2()), "-1 - 1*w");
}

}  // namespace
}  // namespace bcjq
