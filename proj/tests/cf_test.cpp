#include <atomic>
#include <stdexcept>

#include <gtest/gtest.h>

#include "eulercf/catalog.hpp"
#include "eulercf/cf.hpp"
#include "eulercf/oracle.hpp"

namespace eulercf {
namespace {

BigRational q(const char* text) { return BigRational::parse(text); }

GeneralizedCF golden() {
  return GeneralizedCF(1, [](std::size_t) { return std::optional<Element>(Element{1, 1}); });
}

TEST(Convergents, GoldenRatioGivesFibonacciQuotients) {
  const std::vector<Convergent> c = convergents(golden(), 5);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(*c[0].value, BigRational(1));
  EXPECT_EQ(*c[1].value, BigRational(2));
  EXPECT_EQ(*c[2].value, q("3/2"));
  EXPECT_EQ(*c[3].value, q("5/3"));
  EXPECT_EQ(*c[4].value, q("8/5"));
  EXPECT_EQ(*c[5].value, q("13/8"));
}

TEST(Convergents, EulerTableForE) {
  const std::vector<Convergent> c = convergents(find_entry("euler_e")->cf(), 4);
  const char* expected[] = {"2", "3", "8/3", "30/11", "144/53"};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(*c[k].value, q(expected[k])) << "level " << k;
}

TEST(Convergents, ZeroDenominatorLevelIsUndefinedNotAnError) {
  // -1 + 2/(0 + 4/(1 + ...)): q_1 = 0.
  const GeneralizedCF cf = GeneralizedCF::finite(-1, {{2, 0}, {4, 1}, {6, 2}});
  const std::vector<Convergent> c = convergents(cf, 3);
  EXPECT_TRUE(c[0].value.has_value());
  EXPECT_FALSE(c[1].value.has_value());
  EXPECT_TRUE(c[1].q.is_zero());
  ASSERT_TRUE(c[2].value.has_value());
  EXPECT_EQ(*c[2].value, BigRational(-1) + BigRational(2) / (BigRational(4) / 1));
}

TEST(Convergents, FiniteFractionStopsAtItsDepth) {
  const GeneralizedCF cf = GeneralizedCF::finite(1, {{1, 2}});
  EXPECT_EQ(cf.depth_hint(), 1u);
  EXPECT_EQ(convergents(cf, 10).size(), 2u);
  EXPECT_EQ(*convergent_at(cf, 1).value, q("3/2"));
  EXPECT_THROW(convergent_at(cf, 2), std::out_of_range);
}

TEST(Convergents, ZeroPartialNumeratorIsAContractViolation) {
  const GeneralizedCF cf(0, [](std::size_t k) { return std::optional<Element>(Element{k == 3 ? 0 : 1, 1}); });
  EXPECT_THROW(cf.element(3), std::domain_error);
}

TEST(Convergents, GeneratorIsNotCalledTwicePerLevel) {
  auto calls = std::make_shared<std::atomic<int>>(0);
  const GeneralizedCF cf(0, [calls](std::size_t) {
    ++*calls;
    return std::optional<Element>(Element{1, 2});
  });
  ConvergentStream stream(cf);
  for (int i = 0; i < 10; ++i) ASSERT_TRUE(stream.advance());
  EXPECT_EQ(calls->load(), 10);
}

TEST(EvalToTolerance, GoldenRatioMeetsTolerance) {
  EvalOptions options;
  options.tolerance = 1e-30;
  const EvalReport r = eval_to_tolerance(golden(), options);
  EXPECT_EQ(r.termination, Termination::tolerance_met);
  EXPECT_TRUE(r.bracketing);
  ASSERT_TRUE(r.final_value.has_value());
  const HighPrecision phi = (HighPrecision(BigRational(1), 60) + sqrt(HighPrecision(BigRational(5), 60))) /
                            HighPrecision(BigRational(2), 60);
  EXPECT_LT(abs(*r.final_value - phi), HighPrecision(1e-30, 60));
}

TEST(EvalToTolerance, StopsAtMaxDepth) {
  EvalOptions options;
  options.tolerance = 1e-300;
  options.max_depth = 20;
  const EvalReport r = eval_to_tolerance(golden(), options);
  EXPECT_EQ(r.termination, Termination::max_depth);
  EXPECT_EQ(r.convergents.back().level, 20u);
}

TEST(EvalToTolerance, RunOfUndefinedLevelsStops) {
  const GeneralizedCF cf(-1, [](std::size_t k) {
    return std::optional<Element>(k == 1 ? Element{2, 0} : Element{static_cast<long>(2 * k), static_cast<long>(k - 1)});
  });
  EvalOptions options;
  options.max_undefined_run = 0;
  EXPECT_EQ(eval_to_tolerance(cf, options).termination, Termination::undefined_convergent_run);
  options.max_undefined_run = 2;
  EXPECT_NE(eval_to_tolerance(cf, options).termination, Termination::undefined_convergent_run);
}

TEST(EvalToTolerance, DivergentFractionIsDetected) {
  const EvalReport r = eval_to_tolerance(find_entry("log_divergent_alpha_eq_gamma")->cf(), EvalOptions{});
  EXPECT_EQ(r.termination, Termination::divergence_detected);
  EXPECT_LE(r.convergents.back().level, 256u);
}

TEST(EvalToTolerance, RejectsBadOptions) {
  EvalOptions options;
  options.tolerance = 0;
  EXPECT_THROW(eval_to_tolerance(golden(), options), std::invalid_argument);
  options.tolerance = 1e-10;
  options.max_depth = 0;
  EXPECT_THROW(eval_to_tolerance(golden(), options), std::invalid_argument);
}

TEST(BottomUp, MatchesForwardRecurrence) {
  const GeneralizedCF cf = find_entry("brouncker_4_over_pi")->cf();
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(bottom_up_truncation(cf, n), convergent_at(cf, n).value);
}

TEST(BottomUp, UndefinedWhereForwardIsUndefined) {
  const GeneralizedCF cf = GeneralizedCF::finite(-1, {{2, 0}, {4, 1}});
  EXPECT_FALSE(bottom_up_truncation(cf, 1).has_value());
  EXPECT_EQ(bottom_up_truncation(cf, 2), convergent_at(cf, 2).value);
}

}  // namespace
}  // namespace eulercf
