#include <gtest/gtest.h>

#include "bcjq/error.hpp"
#include "bcjq/rational.hpp"

namespace bcjq {
namespace {

TEST(Rational, StoredReducedWithPositiveDenominator) {
  const Rational r(Integer(6), Integer(-8));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r, Rational(Integer(-3), Integer(4)));
  EXPECT_EQ(r.to_string(), "-3/4");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(Integer(1), Integer(0)), DivisionByZero);
  Rational x(3);
  EXPECT_THROW(x /= Rational(0), DivisionByZero);
  EXPECT_THROW(inverse(Rational(0)), DivisionByZero);
}

TEST(Rational, Arithmetic) {
  const Rational a(Integer(1), Integer(7));
  const Rational b(Integer(1), Integer(49));
  EXPECT_EQ(a * a, b);
  EXPECT_EQ(a + a, Rational(Integer(2), Integer(7)));
  EXPECT_EQ(a - a, Rational(0));
  EXPECT_EQ(a / b, Rational(7));
  EXPECT_EQ(-a, Rational(Integer(-1), Integer(7)));
  EXPECT_LT(b, a);
  EXPECT_EQ(inverse(a), Rational(7));
}

TEST(Rational, UnsignedValuesAboveLongRange) {
  const std::uint64_t big = 0xFFFF'FFFF'FFFF'FFFFULL;
  EXPECT_EQ(Rational(big).to_string(), "18446744073709551615");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(Integer(-5), Integer(2)));
  EXPECT_EQ(Rational::parse("+3/9"), Rational(Integer(1), Integer(3)));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational::parse("1/"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
}

TEST(Rational, IntegerConversion) {
  EXPECT_EQ(Rational(Integer(14), Integer(7)).to_integer(), 2);
  EXPECT_THROW(Rational(Integer(1), Integer(3)).to_integer(), InexactDivision);
  EXPECT_TRUE(Rational(4).is_integer());
  EXPECT_EQ(Rational(-4).sign(), -1);
}

TEST(Integer, ExactDivideAndPowers) {
  EXPECT_EQ(exact_divide(Integer(4095), 7), 585);
  EXPECT_THROW(exact_divide(Integer(10), 7), InexactDivision);
  EXPECT_EQ(pow2(0), 1);
  EXPECT_EQ(pow2(70).get_str(), "1180591620717411303424");
}

}  // namespace
}  // namespace bcjq
