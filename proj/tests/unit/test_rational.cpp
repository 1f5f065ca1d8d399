#include <gtest/gtest.h>

#include "tietze/rational.hpp"

using tietze::Rational;

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(Rational(4, 6).str(), "2/3");
    EXPECT_EQ(Rational(4, -6).str(), "-2/3");
    EXPECT_EQ(Rational(-8, -4).str(), "2");
    EXPECT_EQ(Rational(0, -5).str(), "0");
    EXPECT_EQ(Rational(6, 3), Rational(2));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseGrammar)
{
    EXPECT_EQ(Rational::parse("7/3"), Rational(7, 3));
    EXPECT_EQ(Rational::parse("-7/3"), Rational(-7, 3));
    EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
    EXPECT_EQ(Rational::parse("-007"), Rational(-7));
    EXPECT_EQ(Rational::parse("-0"), Rational(0));
    EXPECT_EQ(Rational::parse("123456789012345678901234567890")->str(),
              "123456789012345678901234567890");

    for (const char* bad : {"", "-", "/3", "3/", "3/0", "+3", "1.5", " 1", "1 ", "1/-2", "1//2", "a", "--1"}) {
        EXPECT_FALSE(Rational::parse(bad).has_value()) << bad;
    }
    EXPECT_THROW(Rational::from_string("1/0"), std::invalid_argument);
}

TEST(Rational, Arithmetic)
{
    Rational x(3, 5);
    EXPECT_EQ(x * x, Rational(9, 25));
    EXPECT_EQ(x * x + 1, Rational(34, 25));
    EXPECT_EQ(x - Rational(1, 10), Rational(1, 2));
    EXPECT_EQ(x / Rational(3, 10), Rational(2));
    EXPECT_EQ(-x, Rational(-3, 5));
    EXPECT_EQ(x.reciprocal(), Rational(5, 3));
    EXPECT_THROW(x / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(0).reciprocal(), std::domain_error);
}

TEST(Rational, Ordering)
{
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_LE(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(-5, 2).abs(), Rational(5, 2));
    EXPECT_EQ(Rational(-5, 2).sign(), -1);
    EXPECT_EQ(Rational(0).sign(), 0);
}

TEST(Rational, Rounding)
{
    EXPECT_EQ(Rational(7, 3).floor(), 2);
    EXPECT_EQ(Rational(-7, 3).floor(), -3);
    EXPECT_EQ(Rational(7, 3).ceil(), 3);
    EXPECT_EQ(Rational(-7, 3).ceil(), -2);
    EXPECT_EQ(Rational(5).floor(), 5);
    EXPECT_EQ(Rational(5).ceil(), 5);

    EXPECT_EQ(Rational(5, 3).round_half_away(), 2);
    EXPECT_EQ(Rational(4, 3).round_half_away(), 1);
    EXPECT_EQ(Rational(3, 2).round_half_away(), 2);
    EXPECT_EQ(Rational(5, 2).round_half_away(), 3);
    EXPECT_EQ(Rational(-3, 2).round_half_away(), -2);
    EXPECT_EQ(Rational(-4, 3).round_half_away(), -1);
    EXPECT_EQ(Rational(1, 2).round_half_away(), 1);
    EXPECT_EQ(Rational(-1, 2).round_half_away(), -1);
    EXPECT_EQ(Rational(0).round_half_away(), 0);
}

TEST(Rational, DecimalDisplay)
{
    EXPECT_EQ(Rational(21, 13).to_decimal(6), "1.615384");
    EXPECT_EQ(Rational(-1, 8).to_decimal(3), "-0.125");
    EXPECT_EQ(Rational(-1, 8).to_decimal(2), "-0.12");
    EXPECT_EQ(Rational(1, 1000).to_decimal(3), "0.001");
    EXPECT_EQ(Rational(7).to_decimal(0), "7");
}
