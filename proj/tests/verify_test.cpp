#include <gtest/gtest.h>

#include "eulercf/catalog.hpp"
#include "eulercf/families.hpp"
#include "eulercf/verify.hpp"

namespace eulercf {
namespace {

TEST(Verify, CatalogEntryPasses) {
  const VerifyResult r = verify_entry(*find_entry("golden_ratio"));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.termination, Termination::tolerance_met);
  ASSERT_TRUE(r.error.has_value());
  EXPECT_LT(*r.error, 1e-30);
}

TEST(Verify, DivergentEntryPassesByDetection) {
  const VerifyResult r = verify_entry(*find_entry("log_divergent_alpha_eq_gamma"));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.termination, Termination::divergence_detected);
  EXPECT_FALSE(r.expected.has_value());
}

TEST(Verify, FixedLimitEntryReportsGapToClosedForm) {
  const VerifyResult r = verify_entry(*find_entry("log3_negative_denominators"));
  EXPECT_EQ(r.verdict, Verdict::pass);
  ASSERT_TRUE(r.closed_form_gap.has_value());
  EXPECT_GT(*r.closed_form_gap, 1.0);
}

TEST(Verify, WrongExpectationFails) {
  CatalogEntry entry = *find_entry("golden_ratio");
  entry.expectation = Expectation::fixed_limit;
  entry.limit = BigRational(2);
  const VerifyResult r = verify_entry(entry);
  EXPECT_EQ(r.verdict, Verdict::fail);
}

TEST(Verify, DepthOverrideIsHonoured) {
  VerifyOptions options;
  options.max_depth = 10;
  const VerifyResult r = verify_entry(*find_entry("brouncker_4_over_pi"), options);
  EXPECT_LE(r.depth_used, 10u);
  EXPECT_EQ(r.verdict, Verdict::fail);
}

TEST(Verify, AdhocEntry) {
  const CatalogEntry entry = adhoc_entry(family_III(3, 1));
  EXPECT_EQ(entry.tolerance, 1e-8);
  EXPECT_EQ(entry.max_depth, 2000u);
  EXPECT_TRUE(entry.recipe.empty());
  EXPECT_EQ(verify_entry(entry).verdict, Verdict::pass);
  EXPECT_EQ(adhoc_entry(family_III(2, -2)).expectation, Expectation::divergence);
}

TEST(Verify, ExpectedValueFollowsTheRecipe) {
  // log2_halved is 2/ln 2 pushed through drop, adjoin and a scale: 1/ln 2.
  const std::optional<HighPrecision> v = expected_value(*find_entry("log2_halved"), 50);
  ASSERT_TRUE(v.has_value());
  const HighPrecision expected = HighPrecision(BigRational(1), 60) / log(HighPrecision(BigRational(2), 60));
  EXPECT_LT(abs(*v - expected), HighPrecision(1e-45, 60));
}

}  // namespace
}  // namespace eulercf
