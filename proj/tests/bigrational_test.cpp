#include <stdexcept>

#include <gtest/gtest.h>

#include "eulercf/bigrational.hpp"
#include "eulercf/high_precision.hpp"
#include "eulercf/kexpr.hpp"

namespace eulercf {
namespace {

BigRational q(const char* text) { return BigRational::parse(text); }

TEST(BigRational, ParsesAndNormalizes) {
  EXPECT_EQ(q("6/8").str(), "3/4");
  EXPECT_EQ(q("-3/-6").str(), "1/2");
  EXPECT_EQ(q("4/-2").str(), "-2");
  EXPECT_EQ(q("-0.125").str(), "-1/8");
  EXPECT_EQ(q("17").str(), "17");
  EXPECT_EQ(q(" 2/3 ").str(), "2/3");
}

TEST(BigRational, RejectsMalformedText) {
  EXPECT_THROW(q("1/0"), std::invalid_argument);
  EXPECT_THROW(q(""), std::invalid_argument);
  EXPECT_THROW(q("abc"), std::invalid_argument);
  EXPECT_THROW(q("1/2/3"), std::invalid_argument);
}

TEST(BigRational, Arithmetic) {
  EXPECT_EQ(q("1/2") + q("1/3"), q("5/6"));
  EXPECT_EQ(q("1/2") - q("1/3"), q("1/6"));
  EXPECT_EQ(q("2/3") * q("9/4"), q("3/2"));
  EXPECT_EQ(q("2/3") / q("4/9"), q("3/2"));
  EXPECT_EQ(-q("2/3"), q("-2/3"));
  EXPECT_EQ(q("-2/3").abs(), q("2/3"));
  EXPECT_EQ(q("-2/3").reciprocal(), q("-3/2"));
  EXPECT_THROW(q("1") / BigRational(0), std::domain_error);
  EXPECT_THROW(BigRational(0).reciprocal(), std::domain_error);
}

TEST(BigRational, OrderingAndPredicates) {
  EXPECT_LT(q("1/3"), q("1/2"));
  EXPECT_GT(q("-1/3"), q("-1/2"));
  EXPECT_TRUE(BigRational(0).is_zero());
  EXPECT_TRUE(q("8/4").is_integer());
  EXPECT_FALSE(q("3/4").is_integer());
  EXPECT_EQ(q("-3/4").sign(), -1);
}

TEST(BigRational, IntegerPowers) {
  EXPECT_EQ(pow(q("2/3"), 3), q("8/27"));
  EXPECT_EQ(pow(q("2/3"), -2), q("9/4"));
  EXPECT_EQ(pow(q("5"), 0), BigRational(1));
  EXPECT_THROW(pow(BigRational(0), -1), std::domain_error);
}

TEST(KExpression, EvaluatesInK) {
  const KExpression e = KExpression::parse("1/(k+1)");
  EXPECT_EQ(e(1), q("1/2"));
  EXPECT_EQ(e(4), q("1/5"));
  const KExpression sign = KExpression::parse("(-1)^k");
  EXPECT_EQ(sign(1), BigRational(-1));
  EXPECT_EQ(sign(2), BigRational(1));
  EXPECT_EQ(KExpression::parse("-k*k + 0.5")(3), q("-17/2"));
  EXPECT_EQ(KExpression::parse("2^-k")(3), q("1/8"));
}

TEST(KExpression, Errors) {
  EXPECT_THROW(KExpression::parse("1/(k+"), std::invalid_argument);
  EXPECT_THROW(KExpression::parse("x"), std::invalid_argument);
  EXPECT_THROW(KExpression::parse(""), std::invalid_argument);
  EXPECT_THROW(KExpression::parse("1/(k-2)")(2), std::domain_error);
  EXPECT_THROW(KExpression::parse("2^(1/2)")(1), std::domain_error);
}

TEST(HighPrecision, CarriesRequestedDigits) {
  const HighPrecision third(q("1/3"), 60);
  EXPECT_EQ(third.digits(), 60u);
  const HighPrecision back = third * HighPrecision(BigRational(3), 60);
  EXPECT_LT(abs(back - HighPrecision(BigRational(1), 60)), HighPrecision(1e-58, 60));
  EXPECT_FALSE(HighPrecision::infinity().is_finite());
}

TEST(HighPrecision, ElementaryFunctions) {
  const HighPrecision one(BigRational(1), 50);
  const HighPrecision e = exp(one);
  EXPECT_LT(abs(log(e) - one), HighPrecision(1e-48, 50));
  EXPECT_LT(abs(expm1(one) - (e - one)), HighPrecision(1e-48, 50));
  const HighPrecision two(BigRational(2), 50);
  EXPECT_LT(abs(sqrt(two) * sqrt(two) - two), HighPrecision(1e-48, 50));
  EXPECT_EQ(HighPrecision(q("1/8"), 30).sci(3), "1.25e-1");
}

}  // namespace
}  // namespace eulercf
