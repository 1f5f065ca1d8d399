#include <gtest/gtest.h>

#include "families.hpp"
#include "tietze/sequence.hpp"

using namespace tietze;
using tietze::testing::finite;

TEST(Validate, AllPlusOnesIsValid)
{
    auto report = validate(finite(1, {{+1, 1}, {+1, 1}}));
    EXPECT_TRUE(report.valid());
    EXPECT_FALSE(report.first_violation.has_value());
}

TEST(Validate, GapViolation)
{
    // b_1 + a_2 = 1 - 1 = 0.
    auto report = validate(finite(0, {{-1, 1}, {-1, 2}}));
    ASSERT_FALSE(report.valid());
    EXPECT_EQ(report.first_violation->index, 1u);
    EXPECT_EQ(report.first_violation->reason, ViolationReason::GapViolation);
}

TEST(Validate, BTooSmall)
{
    auto report = validate(finite(0, {{+1, Rational(1, 2)}}));
    ASSERT_FALSE(report.valid());
    EXPECT_EQ(report.first_violation->index, 1u);
    EXPECT_EQ(report.first_violation->reason, ViolationReason::BTooSmall);
}

TEST(Validate, FinalTermIsExemptFromGap)
{
    // (-1, 1) as the last term is fine: nothing follows it.
    EXPECT_TRUE(validate(finite(0, {{+1, 2}, {-1, 1}})).valid());
    // Truncating before the offending successor hides the violation.
    auto cf = finite(0, {{+1, 1}, {-1, 2}});
    EXPECT_TRUE(validate(cf, 1).valid());
    EXPECT_FALSE(validate(cf, 2).valid());
}

TEST(Validate, ReportsSmallestIndex)
{
    // Index 2 breaks the gap, index 3 has b < 1: the gap wins.
    auto report = validate(finite(0, {{+1, 3}, {+1, Rational(3, 2)}, {-1, Rational(1, 2)}}));
    ASSERT_FALSE(report.valid());
    EXPECT_EQ(report.first_violation->index, 2u);
    EXPECT_EQ(report.first_violation->reason, ViolationReason::GapViolation);
}

TEST(Validate, RationalDenominatorsOnTheBoundary)
{
    // b = 2 exactly admits a following -1; b = 2 - 1/10^9 does not.
    EXPECT_TRUE(validate(finite(0, {{+1, 2}, {-1, 1}})).valid());
    auto report = validate(finite(0, {{+1, Rational(1999999999, 1000000000)}, {-1, 1}}));
    EXPECT_FALSE(report.valid());
}

TEST(Validate, EmptySequenceIsValid)
{
    EXPECT_TRUE(validate(finite(Rational(7, 3), {})).valid());
}

TEST(Validate, BeyondLengthThrows)
{
    EXPECT_THROW(validate(finite(0, {{+1, 1}}), 2), InsufficientTerms);
}

TEST(Validate, UnboundedNeedsHorizon)
{
    auto cf = tietze::testing::golden();
    EXPECT_THROW(validate(cf), std::invalid_argument);
    EXPECT_TRUE(validate(cf, 100).valid());
}

TEST(Sequence, FiniteAccess)
{
    auto cf = finite(Rational(7, 3), {{+1, 2}, {-1, 3}});
    EXPECT_EQ(cf.b0(), Rational(7, 3));
    EXPECT_EQ(cf.length(), 2u);
    EXPECT_TRUE(cf.has_term(2));
    EXPECT_FALSE(cf.has_term(3));
    EXPECT_EQ(cf.term(2), (Term{Sign::Minus, 3}));
    EXPECT_THROW(cf.term(0), InsufficientTerms);
    EXPECT_THROW(cf.term(3), InsufficientTerms);
}

TEST(Sequence, PeriodicContinuation)
{
    auto cf = SemiRegularCF::periodic(0, {Term{Sign::Plus, 5}}, {Term{Sign::Plus, 2}, Term{Sign::Minus, 3}});
    EXPECT_FALSE(cf.length().has_value());
    EXPECT_EQ(cf.term(1).b, Rational(5));
    EXPECT_EQ(cf.term(2).b, Rational(2));
    EXPECT_EQ(cf.term(3).b, Rational(3));
    EXPECT_EQ(cf.term(4).b, Rational(2));
    EXPECT_EQ(cf.term(1001).a, Sign::Minus);
    EXPECT_THROW(SemiRegularCF::periodic(0, {}, {}), std::invalid_argument);
}

TEST(Sequence, GeneratedAndTruncated)
{
    auto cf = SemiRegularCF::generated(
        0, [](std::size_t n) { return Term{Sign::Plus, Rational(static_cast<long>(n))}; }, 5);
    EXPECT_EQ(cf.length(), 5u);
    EXPECT_EQ(cf.term(4).b, Rational(4));
    EXPECT_THROW(cf.term(6), InsufficientTerms);

    auto prefix = cf.truncated(3);
    EXPECT_FALSE(prefix.is_generated());
    EXPECT_EQ(prefix.length(), 3u);
    EXPECT_EQ(prefix.term(3).b, Rational(3));
    EXPECT_EQ(prefix, finite(0, {{+1, 1}, {+1, 2}, {+1, 3}}));
}

TEST(Sign, Algebra)
{
    EXPECT_EQ(Sign::Minus * Sign::Minus, Sign::Plus);
    EXPECT_EQ(Sign::Minus * Sign::Plus, Sign::Minus);
    EXPECT_EQ(-Sign::Plus, Sign::Minus);
    EXPECT_EQ(Sign::Minus * Rational(2, 3), Rational(-2, 3));
    EXPECT_EQ(to_int(Sign::Minus), -1);
}
