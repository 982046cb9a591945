#include <stdexcept>
#include <variant>

#include <gtest/gtest.h>

#include "eulercf/catalog.hpp"
#include "eulercf/families.hpp"
#include "eulercf/oracle.hpp"
#include "eulercf/render.hpp"
#include "eulercf/transforms.hpp"

namespace eulercf {
namespace {

BigRational q(const char* text) { return BigRational::parse(text); }

void expect_same_prefix(const GeneralizedCF& x, const GeneralizedCF& y, std::size_t depth) {
  EXPECT_EQ(x.b0(), y.b0());
  const std::vector<Element> ex = x.elements(depth);
  const std::vector<Element> ey = y.elements(depth);
  ASSERT_EQ(ex.size(), ey.size());
  for (std::size_t k = 0; k < ex.size(); ++k) EXPECT_EQ(ex[k], ey[k]) << "level " << k + 1;
}

TEST(EquivalenceScale, DepressionOfFamilyI) {
  // 2ε/(2β + 6ε/(3β + 12ε/(...))) scaled by 1/(k+1) is ε/(β + ε/(β + ...)).
  const BigRational beta = q("3/2");
  const BigRational eps = q("5");
  const GeneralizedCF raw(0, [=](std::size_t k) {
    const BigRational kk(static_cast<long>(k));
    return std::optional<Element>(Element{kk * (kk + 1) * eps, (kk + 1) * beta});
  });
  const GeneralizedCF scaled = equivalence_scale(raw, [](std::size_t k) { return BigRational(1) / static_cast<long>(k + 1); });
  // c_1 = 1/2 scales a_1 = 2ε to ε.
  for (const Element& e : scaled.elements(10)) EXPECT_EQ(e, (Element{eps, beta}));
}

TEST(EquivalenceScale, UnitScaleIsIdentity) {
  const GeneralizedCF cf = find_entry("brouncker_4_over_pi")->cf();
  expect_same_prefix(equivalence_scale(cf, [](std::size_t) { return BigRational(1); }), cf, 20);
}

TEST(EquivalenceScale, ZeroScaleRejected) {
  const GeneralizedCF cf = find_entry("golden_ratio")->cf();
  const GeneralizedCF bad = equivalence_scale(cf, [](std::size_t k) { return BigRational(k == 3 ? 0 : 1); });
  EXPECT_NO_THROW(bad.element(2));
  EXPECT_THROW(bad.elements(5), std::invalid_argument);
}

TEST(EquivalenceScale, HalvingTheMnFormGivesTheSquaresForm) {
  // 2 + 4/(2 + 16/(2 + 36/(...))) -> 1 + 1/(1 + 4/(1 + 9/(1 + 16/(...))))
  const GeneralizedCF raw = family_II_mn(1, 3).cf();
  EXPECT_EQ(raw.b0(), BigRational(2));
  const std::vector<Element> re = raw.elements(4);
  EXPECT_EQ(re[0], (Element{4, 2}));
  EXPECT_EQ(re[1], (Element{16, 2}));
  EXPECT_EQ(re[2], (Element{36, 2}));
  const GeneralizedCF halved = find_entry("log2_halved")->cf();
  EXPECT_EQ(halved.b0(), BigRational(1));
  const std::vector<Element> he = halved.elements(5);
  for (std::size_t k = 0; k < he.size(); ++k) {
    EXPECT_EQ(he[k], (Element{static_cast<long>((k + 1) * (k + 1)), 1})) << "level " << k + 1;
  }
}

TEST(AdjoinHead, GeneralFormWithHeadGivesHalfSurd) {
  // β + δ/(2β + 6αγ/(...)) with δ = 2αγ converges to β/2 + √(β² + 4αγ)/2.
  const FamilySpec spec = family_I(1, 1, 1);
  const GeneralizedCF with_head = adjoin_head(spec.cf(), 1, 2);
  EvalOptions options;
  const EvalReport r = eval_to_tolerance(with_head, options);
  const HighPrecision half(q("1/2"), 60);
  const HighPrecision expected = half + half * sqrt(HighPrecision(BigRational(5), 60));
  EXPECT_LT(abs(*r.final_value - expected), HighPrecision(1e-30, 60));
}

TEST(AdjoinHead, FamilyIIIHeadGivesBetaPlusReciprocal) {
  // (α+β) + αβ/(raw) = β + 1/A for A = atan√(β/α)/√(αβ).
  const FamilySpec spec = family_III(3, 1);
  const HighPrecision A = atan(sqrt(HighPrecision(q("1/3"), 60))) / sqrt(HighPrecision(BigRational(3), 60));
  const HighPrecision expected = HighPrecision(BigRational(1), 60) + HighPrecision(BigRational(1), 60) / A;
  const EvalReport r = eval_to_tolerance(spec.cf(), EvalOptions{});
  EXPECT_LT(abs(*r.final_value - expected), HighPrecision(1e-30, 60));
}

TEST(AdjoinHead, ZeroNumeratorRejected) {
  EXPECT_THROW(adjoin_head(find_entry("golden_ratio")->cf(), 1, 0), std::invalid_argument);
}

TEST(DropHead, FamilyIVHead) {
  const BigRational alpha = q("2/5");
  const HeadSplit split = drop_head(family_IV(alpha).cf());
  EXPECT_EQ(split.b0, 1 - alpha);
  EXPECT_EQ(split.a1, alpha);
  EXPECT_EQ(split.tail.b0(), 2 - alpha);
}

TEST(DropHead, GoldenRatioIsSelfSimilar) {
  const GeneralizedCF cf = find_entry("golden_ratio")->cf();
  expect_same_prefix(drop_head(cf).tail, cf, 20);
}

TEST(DropHead, InverseOfAdjoin) {
  const GeneralizedCF cf = find_entry("exp_alpha_half")->cf();
  const HeadSplit split = drop_head(adjoin_head(cf, q("7/3"), q("-2")));
  EXPECT_EQ(split.b0, q("7/3"));
  EXPECT_EQ(split.a1, q("-2"));
  expect_same_prefix(split.tail, cf, 15);
  const HeadSplit s2 = drop_head(cf);
  expect_same_prefix(adjoin_head(s2.tail, s2.b0, s2.a1), cf, 15);
}

TEST(DropHead, DepthZeroRejected) {
  EXPECT_THROW(drop_head(GeneralizedCF::finite(3, {})), std::invalid_argument);
}

TEST(AlternateSigns, NegativeAlphaPair) {
  // 2 - 1/(3 - 2/(4 - ...)) and 2 + 1/(-3 + 2/(4 + 3/(-5 + ...))) share every convergent.
  const GeneralizedCF plain = find_entry("exp_alpha_neg1")->cf();
  const GeneralizedCF alternating = find_entry("exp_alpha_neg1_alternating")->cf();
  EXPECT_EQ(plain.elements(2)[0], (Element{-1, 3}));
  EXPECT_EQ(alternating.elements(3)[0], (Element{1, -3}));
  EXPECT_EQ(alternating.elements(3)[1], (Element{2, 4}));
  EXPECT_EQ(alternating.elements(3)[2], (Element{3, -5}));
  const std::vector<Convergent> a = convergents(plain, 30);
  const std::vector<Convergent> b = convergents(alternating, 30);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].value, b[k].value);
  // Both approach e/(e-1).
  const HighPrecision e = exp(HighPrecision(BigRational(1), 60));
  const HighPrecision target = e / (e - HighPrecision(BigRational(1), 60));
  EXPECT_LT(abs(HighPrecision(*b.back().value, 60) - target), HighPrecision(1e-20, 60));
}

TEST(AlternateSigns, Involution) {
  const GeneralizedCF cf = find_entry("brouncker_4_over_pi")->cf();
  expect_same_prefix(alternate_signs(alternate_signs(cf)), cf, 20);
}

TEST(ClearDenominators, ReciprocalSeries) {
  // 1 + 1/(1 + (1/2)/(1 + (1/3)/(...))) -> 1 + 1/(2 + 2/(3 + 3/(4 + ...)))
  const GeneralizedCF cf(1, [](std::size_t k) {
    return std::optional<Element>(Element{BigRational(1) / static_cast<long>(k), 1});
  });
  const GeneralizedCF cleared = clear_denominators(cf, 20);
  const std::vector<Element> e = cleared.elements(6);
  EXPECT_EQ(e[0], (Element{1, 1}));
  for (std::size_t k = 1; k < e.size(); ++k) {
    EXPECT_EQ(e[k], (Element{static_cast<long>(k), static_cast<long>(k + 1)})) << "level " << k + 1;
  }
  EXPECT_EQ(display(find_entry("e_minus_1_cleared")->cf(), 4), "1 + 1/(1 + 1/(2 + 2/(3 + 3/(4 + ...))))");
}

TEST(ClearDenominators, SqrtEForm) {
  EXPECT_EQ(display(find_entry("exp_sqrt_e_cleared")->cf(), 4), "1 + 2/(3 + 4/(5 + 6/(7 + 8/(9 + ...))))");
  EXPECT_EQ(display(find_entry("exp_cbrt_e_cleared")->cf(), 4), "2 + 3/(5 + 6/(8 + 9/(11 + 12/(14 + ...))))");
  EXPECT_EQ(display(find_entry("exp_cbrt_e2_cleared")->cf(), 4), "1 + 6/(4 + 12/(7 + 18/(10 + 24/(13 + ...))))");
}

TEST(ClearDenominators, IntegerFractionIsAFixpoint) {
  const GeneralizedCF cf = find_entry("brouncker_4_over_pi")->cf();
  expect_same_prefix(clear_denominators(cf, 30), cf, 30);
}

TEST(Directives, ParseAndPrint) {
  EXPECT_TRUE(std::holds_alternative<DropStep>(parse_directive("drop")));
  EXPECT_TRUE(std::holds_alternative<AlternateSignsStep>(parse_directive("altsign")));
  EXPECT_EQ(std::get<ClearDenominatorsStep>(parse_directive("cleardenom:40")).depth, 40u);
  EXPECT_EQ(std::get<ClearDenominatorsStep>(parse_directive("cleardenom")).depth, kDefaultClearDepth);
  const AdjoinStep adjoin = std::get<AdjoinStep>(parse_directive("adjoin:1/2,-3"));
  EXPECT_EQ(adjoin.b0, q("1/2"));
  EXPECT_EQ(adjoin.a1, q("-3"));
  EXPECT_EQ(std::get<ScaleStep>(parse_directive("scale:k->1/(k+1)")).scale(3), q("1/4"));
  for (const char* text : {"drop", "altsign", "cleardenom:40", "adjoin:1/2,-3", "scale:k->1/(k+1)"}) {
    EXPECT_EQ(to_string(parse_directive(text)), text);
  }
}

TEST(Directives, InvalidOnesAreRejected) {
  for (const char* text : {"", "flip", "adjoin:1", "adjoin:1,0", "scale:1/k", "scale:k->", "cleardenom:0",
                           "cleardenom:x"}) {
    EXPECT_THROW(parse_directive(text), std::invalid_argument) << text;
  }
}

TEST(Recipes, ValueMapComposition) {
  const GeneralizedCF cf = find_entry("golden_ratio")->cf();
  const std::vector<TransformStep> steps = {parse_directive("drop"), parse_directive("adjoin:2,1")};
  const AppliedRecipe r = apply_recipe(cf, steps);
  // drop: x -> 1/(x - 1); adjoin: y -> 2 + 1/y; composed: x -> 2 + (x - 1) = x + 1.
  EXPECT_EQ(r.value_map.apply(q("3")), q("4"));
  EXPECT_EQ(r.value_map.apply(q("-1/2")), q("1/2"));
  EXPECT_FALSE(Mobius::drop(1, 1).apply(BigRational(1)).has_value());
}

TEST(Recipes, InvarianceCheckPassesForEveryCatalogStep) {
  for (const CatalogEntry& entry : catalog()) {
    GeneralizedCF current = entry.family.cf();
    for (const TransformStep& step : entry.recipe) {
      const AppliedStep applied = apply_step(current, step);
      const InvarianceCheck check = check_value_invariance(current, applied, 25);
      EXPECT_TRUE(check.ok) << entry.name << " " << to_string(step);
      current = applied.cf;
    }
  }
}

}  // namespace
}  // namespace eulercf
