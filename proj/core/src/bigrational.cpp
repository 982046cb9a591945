#include "eulercf/bigrational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace eulercf {
namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text);
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

BigRational::BigRational(long long value) {
  value_ = mpz_class(std::to_string(value), 10);
}

BigRational::BigRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("BigRational: zero denominator");
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view raw) {
  const std::string_view text = trim(raw);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(trim(text.substr(0, slash)));
    const mpz_class den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return BigRational(num, den);
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      negative = whole[0] == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !is_integer_literal(whole)) ||
        (!frac.empty() && !is_integer_literal(frac)) ||
        (!frac.empty() && (frac[0] == '+' || frac[0] == '-'))) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    if (negative) digits = -digits;
    return BigRational(digits, scale);
  }

  return BigRational(parse_integer(text));
}

std::string BigRational::str() const { return value_.get_str(10); }

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("BigRational: reciprocal of zero");
  return BigRational(mpq_class(1) / value_);
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.str(); }

}  // namespace eulercf
