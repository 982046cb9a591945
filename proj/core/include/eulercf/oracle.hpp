#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulercf/bigrational.hpp"
#include "eulercf/cf.hpp"
#include "eulercf/families.hpp"
#include "eulercf/high_precision.hpp"
#include "eulercf/quadrature.hpp"

namespace eulercf {

/// Raised when asked for the value of a fraction that has none.
class NoFiniteTarget : public std::domain_error {
 public:
  NoFiniteTarget() : std::domain_error("no finite target: the fraction diverges") {}
};

/// The closed-form value (or quadrature ratio) of spec.cf() at `digits`.
/// Throws NoFiniteTarget for divergent targets and std::domain_error for
/// non-real ones.
HighPrecision target_value(const FamilySpec& spec, unsigned digits = kDefaultDigits);

struct SeedPair {
  HighPrecision A;
  HighPrecision B;
};

/// A and B by tanh-sinh quadrature with absolute error at most
/// 10^(-digits). Families V, VI and VII directly; II, III and IV through
/// their embeddings into VI and VII.
SeedPair quadrature_AB(const FamilySpec& spec, unsigned digits = kDefaultDigits);

/// A single seed integral; `shift` = 0 gives A, 1 gives B, k gives the
/// (k+1)-th member of the sequence. Same families as quadrature_AB.
QuadratureResult seed_integral(const FamilySpec& spec, std::size_t shift, unsigned digits = kDefaultDigits);

/// Exact fold b0 + a1/(b1 + ... + a_n/b_n) from level n upward; nullopt if
/// the fold divides by zero or the fraction is shorter than n.
std::optional<BigRational> bottom_up_truncation(const GeneralizedCF& cf, std::size_t n);

struct SeedForms {
  std::string A_text;
  std::string B_text;
  HighPrecision A;
  HighPrecision B;
};

/// Elementary closed forms of A and B for families II, II_MN, III, III_LOG
/// and IV; nullopt otherwise.
std::optional<SeedForms> seed_closed_forms(const FamilySpec& spec, unsigned digits = kDefaultDigits);

/// T_1..T_count of the sequence behind the scheme, from the closed-form
/// seeds and the families' two-term reductions, carried with 20 guard
/// digits. Families II, II_MN, III, III_LOG and IV. Throws
/// std::invalid_argument otherwise.
std::vector<HighPrecision> explicit_terms(const FamilySpec& spec, std::size_t count, unsigned digits = kDefaultDigits);

/// π from Machin's formula 16 atan(1/5) - 4 atan(1/239), summed in exact
/// integer fixed point.
HighPrecision pi_machin(unsigned digits = kDefaultDigits);

}  // namespace eulercf
