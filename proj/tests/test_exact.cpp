#include <gtest/gtest.h>

#include "nsbin/exact.hpp"

using namespace nsbin;

TEST(Exact, FractionStringsAreReduced)
{
    EXPECT_EQ(to_fraction_string(parse_rational("6345/28670")), "27/122");
    EXPECT_EQ(to_fraction_string(parse_rational("7")), "7/1");
    EXPECT_EQ(to_display_string(parse_rational("14/2")), "7");
    EXPECT_EQ(to_display_string(parse_rational("-59184/-146016")), "137/338");
}

TEST(Exact, MakeRationalMovesSignToNumerator)
{
    const Rational q = make_rational(BigInt(-59184), BigInt(-5408 * 27));
    EXPECT_EQ(q, Rational(137, 338));
    EXPECT_EQ(make_rational(BigInt(3), BigInt(-4)), Rational(-3, 4));
    EXPECT_THROW(make_rational(BigInt(1), BigInt(0)), Error);
}

TEST(Exact, ParseRejectsGarbage)
{
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("a/2"), Error);
    EXPECT_THROW(parse_rational(""), Error);
    EXPECT_THROW(parse_rational("1/"), Error);
}

TEST(Exact, DecimalRenderingRoundsHalfUp)
{
    EXPECT_EQ(to_decimal_string(Rational(137, 338), 3), "0.405");
    EXPECT_EQ(to_decimal_string(Rational(32, 243), 3), "0.132");
    EXPECT_EQ(to_decimal_string(Rational(16, 27), 3), "0.593");
    EXPECT_EQ(to_decimal_string(Rational(7), 3), "7.000");
    EXPECT_EQ(to_decimal_string(Rational(1, 2000), 3), "0.001");
    EXPECT_EQ(to_decimal_string(Rational(1, 2001), 3), "0.000");
    EXPECT_EQ(to_decimal_string(Rational(-5, 8), 2), "-0.63");
    EXPECT_EQ(to_decimal_string(Rational(2007, 28670), 3), "0.070");
}
