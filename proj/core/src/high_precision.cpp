#include "eulercf/high_precision.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace eulercf {

std::ostream& operator<<(std::ostream& os, const HighPrecision& x) { return os << x.sci(20); }

mpfr_prec_t bits_for_digits(unsigned digits) {
  if (digits == 0) throw std::invalid_argument("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

HighPrecision::HighPrecision(unsigned digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

HighPrecision::HighPrecision(const BigRational& value, unsigned digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_q(value_, value.mpq().get_mpq_t(), MPFR_RNDN);
}

HighPrecision::HighPrecision(double value, unsigned digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

HighPrecision::HighPrecision(const HighPrecision& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HighPrecision::HighPrecision(HighPrecision&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

HighPrecision& HighPrecision::operator=(const HighPrecision& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

HighPrecision& HighPrecision::operator=(HighPrecision&& other) noexcept {
  std::swap(digits_, other.digits_);
  mpfr_swap(value_, other.value_);
  return *this;
}

HighPrecision::~HighPrecision() { mpfr_clear(value_); }

HighPrecision HighPrecision::infinity(unsigned digits) {
  HighPrecision result(digits);
  mpfr_set_inf(result.value_, 1);
  return result;
}

HighPrecision HighPrecision::with_digits(unsigned digits) const {
  HighPrecision result(digits);
  mpfr_set(result.value_, value_, MPFR_RNDN);
  return result;
}

std::string HighPrecision::sci(unsigned significant) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exponent = 0;
  std::unique_ptr<char, void (*)(char*)> digits(
      mpfr_get_str(nullptr, &exponent, 10, std::max(significant, 1u), value_, MPFR_RNDN), mpfr_free_str);
  std::string text(digits.get());
  std::string sign_prefix;
  if (!text.empty() && text[0] == '-') {
    sign_prefix = "-";
    text.erase(0, 1);
  }
  std::string mantissa = text.substr(0, 1);
  if (text.size() > 1) mantissa += "." + text.substr(1);
  return sign_prefix + mantissa + "e" + std::to_string(static_cast<long>(exponent) - 1);
}

namespace {

// Result precision follows the wider operand.
void widen_to(HighPrecision& target, const HighPrecision& other) {
  if (other.digits() > target.digits()) target = target.with_digits(other.digits());
}

}  // namespace

HighPrecision& HighPrecision::operator+=(const HighPrecision& rhs) {
  widen_to(*this, rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HighPrecision& HighPrecision::operator-=(const HighPrecision& rhs) {
  widen_to(*this, rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HighPrecision& HighPrecision::operator*=(const HighPrecision& rhs) {
  widen_to(*this, rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HighPrecision& HighPrecision::operator/=(const HighPrecision& rhs) {
  widen_to(*this, rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HighPrecision HighPrecision::operator-() const {
  HighPrecision result(*this);
  mpfr_neg(result.value_, result.value_, MPFR_RNDN);
  return result;
}

#define EULERCF_UNARY(name, mpfr_fn)                \
  HighPrecision name(const HighPrecision& x) {      \
    HighPrecision result(x.digits());               \
    mpfr_fn(result.get(), x.get(), MPFR_RNDN);      \
    return result;                                  \
  }

EULERCF_UNARY(abs, mpfr_abs)
EULERCF_UNARY(sqrt, mpfr_sqrt)
EULERCF_UNARY(exp, mpfr_exp)
EULERCF_UNARY(expm1, mpfr_expm1)
EULERCF_UNARY(log, mpfr_log)
EULERCF_UNARY(log1p, mpfr_log1p)
EULERCF_UNARY(atan, mpfr_atan)
EULERCF_UNARY(sinh, mpfr_sinh)
EULERCF_UNARY(cosh, mpfr_cosh)

#undef EULERCF_UNARY

HighPrecision pow(const HighPrecision& base, const HighPrecision& exponent) {
  HighPrecision result(std::max(base.digits(), exponent.digits()));
  mpfr_pow(result.get(), base.get(), exponent.get(), MPFR_RNDN);
  return result;
}

HighPrecision max(const HighPrecision& a, const HighPrecision& b) { return a < b ? b : a; }

HighPrecision to_high_precision(const BigRational& value, unsigned digits) {
  return HighPrecision(value, digits);
}

}  // namespace eulercf
