#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eulercf {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(long long value);  // NOLINT(google-explicit-constructor)
  explicit BigRational(const mpz_class& integer) : value_(integer) {}
  BigRational(const mpz_class& numerator, const mpz_class& denominator);
  explicit BigRational(mpq_class value);

  /// Parses "num/den", "int", or a terminating decimal such as "-0.125".
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static BigRational parse(std::string_view text);

  const mpq_class& mpq() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  BigRational reciprocal() const;
  BigRational abs() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Integer power; negative exponents invert (throws on 0^-n).
BigRational pow(const BigRational& base, long exponent);

std::ostream& operator<<(std::ostream& os, const BigRational& value);

}  // namespace eulercf
