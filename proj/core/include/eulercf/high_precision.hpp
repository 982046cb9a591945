#pragma once

#include <iosfwd>
#include <string>

#include <mpfr.h>

#include "eulercf/bigrational.hpp"

namespace eulercf {

inline constexpr unsigned kDefaultDigits = 50;

/// Binary precision that carries `digits` significant decimal digits plus
/// a few guard bits.
mpfr_prec_t bits_for_digits(unsigned digits);

/// Arbitrary-precision binary float (MPFR), rounded to nearest.
///
/// Every value carries its own precision. Binary operations produce a
/// result at the larger of the two operand precisions.
class HighPrecision {
 public:
  explicit HighPrecision(unsigned digits = kDefaultDigits);
  HighPrecision(const BigRational& value, unsigned digits);
  HighPrecision(double value, unsigned digits);
  HighPrecision(const HighPrecision& other);
  HighPrecision(HighPrecision&& other) noexcept;
  HighPrecision& operator=(const HighPrecision& other);
  HighPrecision& operator=(HighPrecision&& other) noexcept;
  ~HighPrecision();

  static HighPrecision infinity(unsigned digits = kDefaultDigits);

  unsigned digits() const noexcept { return digits_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  /// Same value re-rounded to a different precision.
  HighPrecision with_digits(unsigned digits) const;

  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `significant` digits, e.g. "1.2345e-31".
  std::string sci(unsigned significant = 6) const;

  HighPrecision& operator+=(const HighPrecision& rhs);
  HighPrecision& operator-=(const HighPrecision& rhs);
  HighPrecision& operator*=(const HighPrecision& rhs);
  HighPrecision& operator/=(const HighPrecision& rhs);
  friend HighPrecision operator+(HighPrecision lhs, const HighPrecision& rhs) { return lhs += rhs; }
  friend HighPrecision operator-(HighPrecision lhs, const HighPrecision& rhs) { return lhs -= rhs; }
  friend HighPrecision operator*(HighPrecision lhs, const HighPrecision& rhs) { return lhs *= rhs; }
  friend HighPrecision operator/(HighPrecision lhs, const HighPrecision& rhs) { return lhs /= rhs; }
  HighPrecision operator-() const;

  friend bool operator<(const HighPrecision& a, const HighPrecision& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const HighPrecision& a, const HighPrecision& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const HighPrecision& a, const HighPrecision& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const HighPrecision& a, const HighPrecision& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }
  friend bool operator==(const HighPrecision& a, const HighPrecision& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

  bool operator<(double rhs) const { return mpfr_cmp_d(value_, rhs) < 0; }
  bool operator>(double rhs) const { return mpfr_cmp_d(value_, rhs) > 0; }

 private:
  unsigned digits_;
  mpfr_t value_;
};

HighPrecision abs(const HighPrecision& x);
HighPrecision sqrt(const HighPrecision& x);
HighPrecision exp(const HighPrecision& x);
HighPrecision expm1(const HighPrecision& x);
HighPrecision log(const HighPrecision& x);
HighPrecision log1p(const HighPrecision& x);
HighPrecision atan(const HighPrecision& x);
HighPrecision sinh(const HighPrecision& x);
HighPrecision cosh(const HighPrecision& x);
HighPrecision pow(const HighPrecision& base, const HighPrecision& exponent);
HighPrecision max(const HighPrecision& a, const HighPrecision& b);

/// Scientific notation with 20 significant digits.
std::ostream& operator<<(std::ostream& os, const HighPrecision& x);

/// Exact rational -> float at `digits`.
HighPrecision to_high_precision(const BigRational& value, unsigned digits);

}  // namespace eulercf
