#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulercf/bigrational.hpp"
#include "eulercf/cf.hpp"
#include "eulercf/high_precision.hpp"

namespace eulercf {

/// Row k of a three-term relation f_k T_k = g_k T_{k+1} + h_k T_{k+2}.
struct CoefficientTriple {
  std::size_t k = 0;
  BigRational f;
  BigRational g;
  BigRational h;

  friend bool operator==(const CoefficientTriple&, const CoefficientTriple&) = default;
};

/// constant + slope * k
struct AffineCoefficient {
  BigRational constant;
  BigRational slope;

  BigRational at(std::size_t k) const;
  /// Smallest integer k >= 1 with at(k) == 0, if any. An identically zero
  /// coefficient vanishes at k = 1.
  std::optional<std::size_t> first_zero() const;

  friend bool operator==(const AffineCoefficient&, const AffineCoefficient&) = default;
};

/// A k-indexed family of coefficient rows plus a note describing the seed
/// pair A, B (the first two members of the underlying sequence).
class RecurrenceScheme {
 public:
  using RowFn = std::function<CoefficientTriple(std::size_t k)>;

  /// Rows affine in k. Throws std::invalid_argument if f vanishes at some
  /// level k >= 1.
  RecurrenceScheme(AffineCoefficient f, AffineCoefficient g, AffineCoefficient h, std::string seed_note = {});

  /// Arbitrary rows. `last_row`, when given, is the last level whose row
  /// is defined; the generated fraction then has depth last_row - 1.
  RecurrenceScheme(RowFn rows, std::string seed_note = {}, std::optional<std::size_t> last_row = std::nullopt);

  /// Row k (k >= 1). Throws std::invalid_argument if the row reports a
  /// different index or has f == 0.
  CoefficientTriple triple(std::size_t k) const;

  const std::string& seed_note() const noexcept { return seed_note_; }
  std::optional<std::size_t> last_row() const noexcept { return last_row_; }

  /// Present when the scheme was built from affine templates.
  const std::optional<std::array<AffineCoefficient, 3>>& affine() const noexcept { return affine_; }

 private:
  RowFn rows_;
  std::string seed_note_;
  std::optional<std::size_t> last_row_;
  std::optional<std::array<AffineCoefficient, 3>> affine_;
};

/// f_1 A / B = g_1 + f_2 h_1 / (g_2 + f_3 h_2 / (g_3 + ...)):
/// b0 = g_1, a_k = f_{k+1} h_k, b_k = g_{k+1}.
///
/// A zero h_k ends the fraction at depth k - 1 (the remaining relation is
/// two-term, so f_k T_k / T_{k+1} = g_k exactly). Element k reads rows k and
/// k + 1 only.
GeneralizedCF cf_from_recurrence(const RecurrenceScheme& scheme);

/// r_k = f_k T_k - g_k T_{k+1} - h_k T_{k+2} for k = 1..k_max, with `terms`
/// 1-indexed (terms[0] is T_1). Throws std::invalid_argument when fewer than
/// k_max + 2 terms are supplied.
std::vector<BigRational> recurrence_residual(const RecurrenceScheme& scheme, std::span<const BigRational> terms,
                                             std::size_t k_max);

/// Same, for terms known only to finite precision.
std::vector<HighPrecision> recurrence_residual(const RecurrenceScheme& scheme,
                                               std::span<const HighPrecision> terms, std::size_t k_max);

}  // namespace eulercf
