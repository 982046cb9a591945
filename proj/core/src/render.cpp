#include "eulercf/render.hpp"

#include <stdexcept>

namespace eulercf {

namespace {

mpz_class pow10(long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return out;
}

/// num/den rounded to an integer, num, den >= 0.
mpz_class round_quotient(const mpz_class& num, const mpz_class& den, Rounding rounding) {
  if (rounding == Rounding::truncate) return num / den;
  return (2 * num + den) / (2 * den);
}

/// |x| * 10^shift as an exact rational, shift of either sign.
void scaled(const BigRational& x, long shift, mpz_class& num, mpz_class& den) {
  num = abs(x.numerator());
  den = x.denominator();
  if (shift >= 0) {
    num *= pow10(shift);
  } else {
    den *= pow10(-shift);
  }
}

/// Largest e with 10^e <= |x|, x != 0.
long decimal_exponent(const BigRational& x) {
  const mpz_class num = abs(x.numerator());
  const mpz_class den = x.denominator();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  // sizeinbase may overshoot by one; settle e so that 10^e <= num/den < 10^(e+1).
  auto at_least = [&](long exponent) {
    return exponent >= 0 ? num >= den * pow10(exponent) : num * pow10(-exponent) >= den;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;
  return e;
}

void strip_fraction_zeros(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
}

}  // namespace

std::string to_fixed(const BigRational& x, unsigned places, Rounding rounding, char mark) {
  mpz_class num;
  mpz_class den;
  scaled(x, static_cast<long>(places), num, den);
  const mpz_class n = round_quotient(num, den, rounding);

  std::string digits = n.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) out += mark + digits.substr(digits.size() - places);
  if (x.sign() < 0 && n != 0) out.insert(0, 1, '-');
  return out;
}

std::string euler_style(const BigRational& x) { return to_fixed(x, 4, Rounding::truncate, ','); }

std::string to_significant(const BigRational& x, unsigned significant, Rounding rounding) {
  if (significant == 0) throw std::invalid_argument("to_significant: need at least one digit");
  if (x.is_zero()) return "0";

  long e = decimal_exponent(x);
  const long sig = static_cast<long>(significant);
  mpz_class num;
  mpz_class den;
  scaled(x, sig - 1 - e, num, den);
  mpz_class n = round_quotient(num, den, rounding);
  if (n == pow10(sig)) {
    n /= 10;
    ++e;
  }
  const std::string d = n.get_str();

  std::string out;
  if (e >= -7 && e < 21) {
    if (e >= 0) {
      if (e + 1 >= sig) {
        out = d + std::string(static_cast<std::size_t>(e + 1 - sig), '0');
      } else {
        out = d.substr(0, static_cast<std::size_t>(e + 1)) + "." + d.substr(static_cast<std::size_t>(e + 1));
      }
    } else {
      out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
    }
    strip_fraction_zeros(out);
  } else {
    out = d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    strip_fraction_zeros(out);
    out += "e" + std::to_string(e);
  }
  if (x.sign() < 0) out.insert(0, 1, '-');
  return out;
}

std::string to_significant(const HighPrecision& x, unsigned significant) {
  if (x.is_nan()) return "nan";
  if (!x.is_finite()) return x.sign() < 0 ? "-inf" : "inf";
  mpq_class exact;
  mpfr_get_q(exact.get_mpq_t(), x.get());
  return to_significant(BigRational(exact), significant);
}

namespace {

std::string term(const BigRational& x) {
  if (x.is_integer()) return x.str();
  return "(" + x.str() + ")";
}

}  // namespace

std::string display(const GeneralizedCF& cf, std::size_t depth) {
  const std::vector<Element> elements = cf.elements(depth);
  std::string out = term(cf.b0());
  std::size_t open = 0;
  for (const Element& e : elements) {
    out += e.a.sign() < 0 ? " - " : " + ";
    out += term(e.a.abs()) + "/(" + term(e.b);
    ++open;
  }
  if (elements.size() == depth && cf.element(depth + 1)) out += " + ...";
  out += std::string(open, ')');
  return out;
}

}  // namespace eulercf
