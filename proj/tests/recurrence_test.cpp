#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "eulercf/families.hpp"
#include "eulercf/oracle.hpp"
#include "eulercf/recurrence.hpp"

namespace eulercf {
namespace {

BigRational q(const char* text) { return BigRational::parse(text); }

AffineCoefficient affine(const BigRational& constant, const BigRational& slope) { return {constant, slope}; }

TEST(Recurrence, FamilyIRowsGiveDisplayedFraction) {
  // f_k = kα, g_k = (k+1)β, h_k = (k+2)γ
  const BigRational alpha = q("2/3");
  const BigRational beta = q("5");
  const BigRational gamma = q("-7/2");
  const RecurrenceScheme scheme(affine(0, alpha), affine(beta, beta), affine(2 * gamma, gamma));
  const GeneralizedCF cf = cf_from_recurrence(scheme);
  EXPECT_EQ(cf.b0(), 2 * beta);
  const std::vector<Element> e = cf.elements(4);
  EXPECT_EQ(e[0], (Element{6 * alpha * gamma, 3 * beta}));
  EXPECT_EQ(e[1], (Element{12 * alpha * gamma, 4 * beta}));
  EXPECT_EQ(e[2].a, 20 * alpha * gamma);
  EXPECT_EQ(e[3].a, 30 * alpha * gamma);
}

TEST(Recurrence, ConstantRows) {
  const RecurrenceScheme scheme(affine(3, 0), affine(2, 0), affine(5, 0));
  const GeneralizedCF cf = cf_from_recurrence(scheme);
  EXPECT_EQ(cf.b0(), BigRational(2));
  for (const Element& e : cf.elements(6)) EXPECT_EQ(e, (Element{15, 2}));
}

TEST(Recurrence, ZeroLeadingCoefficientIsRejected) {
  EXPECT_THROW(RecurrenceScheme(affine(0, 0), affine(1, 0), affine(1, 0)), std::invalid_argument);
  EXPECT_THROW(RecurrenceScheme(affine(3, -1), affine(1, 0), affine(1, 0)), std::invalid_argument);
  const RecurrenceScheme bad([](std::size_t k) { return CoefficientTriple{k, k == 2 ? 0 : 1, 1, 1}; });
  EXPECT_THROW(bad.triple(2), std::invalid_argument);
  const RecurrenceScheme misindexed([](std::size_t k) { return CoefficientTriple{k + 1, 1, 1, 1}; });
  EXPECT_THROW(misindexed.triple(1), std::invalid_argument);
}

TEST(Recurrence, ZeroHTruncates) {
  const RecurrenceScheme scheme(affine(1, 0), affine(1, 0), affine(0, 0));
  const GeneralizedCF cf = cf_from_recurrence(scheme);
  EXPECT_EQ(cf.depth_hint(), 0u);
  EXPECT_FALSE(cf.element(1).has_value());

  const RecurrenceScheme later(affine(1, 0), affine(1, 0), affine(3, -1));
  const GeneralizedCF short_cf = cf_from_recurrence(later);
  EXPECT_EQ(short_cf.elements(10).size(), 2u);
}

TEST(Recurrence, ElementKReadsRowsKAndKPlusOneOnly) {
  auto seen = std::make_shared<std::vector<std::size_t>>();
  const RecurrenceScheme scheme([seen](std::size_t k) {
    seen->push_back(k);
    return CoefficientTriple{k, BigRational(static_cast<long>(k)), 2, 1};
  });
  const GeneralizedCF cf = cf_from_recurrence(scheme);
  seen->clear();
  (void)cf.element(5);
  for (std::size_t k : *seen) EXPECT_TRUE(k == 5 || k == 6) << "row " << k;
  EXPECT_FALSE(seen->empty());
}

TEST(Recurrence, PowerSequenceResidualsVanish) {
  // α = βx + γx² makes T_k = x^(k-1) a solution of α T_k = β T_{k+1} + γ T_{k+2}.
  const BigRational x = q("3/7");
  const BigRational beta = q("2");
  const BigRational gamma = q("-5/3");
  const BigRational alpha = beta * x + gamma * x * x;
  const RecurrenceScheme scheme(affine(alpha, 0), affine(beta, 0), affine(gamma, 0));
  std::vector<BigRational> terms;
  for (long k = 0; k < 12; ++k) terms.push_back(pow(x, k));
  for (const BigRational& r : recurrence_residual(scheme, terms, 10)) EXPECT_TRUE(r.is_zero());
}

TEST(Recurrence, ZeroTermsHaveZeroResiduals) {
  const RecurrenceScheme scheme(affine(1, 1), affine(2, 3), affine(-1, 2));
  const std::vector<BigRational> zeros(7);
  for (const BigRational& r : recurrence_residual(scheme, zeros, 5)) EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(recurrence_residual(scheme, zeros, 6), std::invalid_argument);
}

TEST(Recurrence, FamilyIVQuadratureTermsSatisfyTheRows) {
  // T_k = ∫₀¹ x^(k-1) e^x dx by quadrature, independent of the closed forms.
  const FamilySpec spec = family_IV(1);
  std::vector<HighPrecision> terms;
  for (std::size_t shift = 0; shift < 8; ++shift) terms.push_back(seed_integral(spec, shift, 50).value);
  for (const HighPrecision& r : recurrence_residual(spec.scheme, terms, 6)) EXPECT_LT(abs(r), HighPrecision(1e-30, 50));
}

TEST(Recurrence, AffineFirstZero) {
  EXPECT_EQ(affine(3, -1).first_zero(), 3u);
  EXPECT_EQ(affine(0, 0).first_zero(), 1u);
  EXPECT_FALSE(affine(q("1/2"), -1).first_zero().has_value());
  EXPECT_FALSE(affine(1, 1).first_zero().has_value());
  EXPECT_EQ(affine(2, 3).at(4), BigRational(14));
}

}  // namespace
}  // namespace eulercf
