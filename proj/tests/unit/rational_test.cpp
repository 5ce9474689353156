#include "hexagram/rational.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"
#include "hexagram/error.hpp"

namespace hexagram {
namespace {

TEST(RationalTest, ElementaryArithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(7) * Rational(0), Rational(0));
  EXPECT_EQ(Rational(5, 36) / Rational(1, 72), Rational(10));
  EXPECT_EQ(Rational(10) * Rational(1, 72), Rational(5, 36));
}

TEST(RationalTest, AlwaysReduced) {
  const Rational r(-6, -8);
  EXPECT_EQ(r.numerator(), 3);
  EXPECT_EQ(r.denominator(), 4);
  const Rational s(6, -8);
  EXPECT_EQ(s.numerator(), -3);
  EXPECT_EQ(s.denominator(), 4);
}

TEST(RationalTest, DivisionByZeroThrows) {
  try {
    (void)(Rational(1) / Rational(0));
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational(0).inverse(), Error);
}

TEST(RationalTest, SerializesAsPOverQ) {
  EXPECT_EQ(Rational(5, 6).to_string(), "5/6");
  EXPECT_EQ(Rational(-37, 36).to_string(), "-37/36");
  EXPECT_EQ(Rational(10).to_string(), "10");
  EXPECT_EQ(Rational(0).to_string(), "0");
}

TEST(RationalTest, ParsesOnlyCanonicalLiterals) {
  EXPECT_EQ(Rational::parse("-37/36"), Rational(-37, 36));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  for (const char* bad : {"", "-", "1/", "/2", "1/-2", "1.5", "a", "1/2/3", " 1"}) {
    try {
      (void)Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
  EXPECT_THROW((void)Rational::parse("1/0"), Error);
}

TEST(RationalTest, DecimalRendering) {
  EXPECT_EQ(Rational(1, 3).to_decimal(12), "0.333333333333");
  EXPECT_EQ(Rational(-2, 3).to_decimal(4), "-0.6667");
  EXPECT_EQ(Rational(49).to_decimal(12), "49");
  EXPECT_EQ(Rational(21, 148).to_decimal(5), "0.14189");
  EXPECT_EQ(Rational(999999, 100000).to_decimal(3), "10");
  EXPECT_EQ(Rational(123456).to_decimal(2), "120000");
}

TEST(RationalPropertyTest, FieldAxiomsHoldExactly) {
  testing::RationalGenerator gen(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.next();
    const Rational b = gen.next();
    const Rational c = gen.next();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(RationalPropertyTest, ParseInvertsToString) {
  testing::RationalGenerator gen(12);
  for (int i = 0; i < 200; ++i) {
    const Rational a = gen.next() * gen.next() - gen.next();
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

}  // namespace
}  // namespace hexagram
