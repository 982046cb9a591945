#include "eulercf/quadrature.hpp"

#include <stdexcept>

namespace eulercf {

namespace {

constexpr double kMaxT = 10.0;
constexpr int kTinyRun = 2;

class Sampler {
 public:
  Sampler(const EndpointIntegrand& f, const HighPrecision& upper, unsigned digits, const HighPrecision& cutoff)
      : f_(f), upper_(upper.with_digits(digits)), digits_(digits), cutoff_(cutoff.with_digits(digits)),
        half_pi_(digits), quarter_pi_upper_(digits) {
    mpfr_const_pi(half_pi_.get(), MPFR_RNDN);
    mpfr_div_2ui(half_pi_.get(), half_pi_.get(), 1, MPFR_RNDN);
    quarter_pi_upper_ = half_pi_ * upper_;
    mpfr_div_2ui(quarter_pi_upper_.get(), quarter_pi_upper_.get(), 1, MPFR_RNDN);
  }

  HighPrecision centre() {
    HighPrecision mid = upper_;
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    return quarter_pi_upper_ * call(mid, mid, mid);
  }

  /// Sum of the two weighted samples at ±t; sets `negligible` when both
  /// fall below the cutoff.
  HighPrecision pair(const HighPrecision& t, bool& negligible) {
    const HighPrecision u = half_pi_ * sinh(t);
    const HighPrecision one(1.0, digits_);
    const HighPrecision e2u = exp(u + u);
    const HighPrecision d = upper_ / (one + e2u);
    const HighPrecision ch = cosh(u);
    const HighPrecision w = quarter_pi_upper_ * cosh(t) / (ch * ch);
    const HighPrecision rest = upper_ - d;

    const HighPrecision left = w * call(d, d, rest);
    const HighPrecision right = w * call(rest, rest, d);
    negligible = abs(left) < cutoff_ && abs(right) < cutoff_;
    return left + right;
  }

  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  HighPrecision call(const HighPrecision& x, const HighPrecision& from_left, const HighPrecision& from_right) {
    ++evaluations_;
    HighPrecision value = f_(x, from_left, from_right);
    if (value.is_nan()) throw std::domain_error("tanh_sinh: integrand returned NaN");
    return value.with_digits(digits_);
  }

  const EndpointIntegrand& f_;
  HighPrecision upper_;
  unsigned digits_;
  HighPrecision cutoff_;
  HighPrecision half_pi_;
  HighPrecision quarter_pi_upper_;
  std::size_t evaluations_ = 0;
};

// Sum over nodes t = start, start + stride, ... until the samples stay
// negligible or t passes kMaxT.
HighPrecision sweep(Sampler& sampler, const HighPrecision& start, const HighPrecision& stride, unsigned digits) {
  HighPrecision sum(0.0, digits);
  HighPrecision t = start;
  int tiny = 0;
  while (!(t > kMaxT)) {
    bool negligible = false;
    sum += sampler.pair(t, negligible);
    tiny = negligible ? tiny + 1 : 0;
    if (tiny >= kTinyRun && t > 1.0) break;
    t += stride;
  }
  return sum;
}

}  // namespace

QuadratureResult tanh_sinh(const EndpointIntegrand& f, const HighPrecision& upper, const QuadratureOptions& options) {
  if (!f) throw std::invalid_argument("tanh_sinh: empty integrand");
  if (!(upper > 0.0)) throw std::invalid_argument("tanh_sinh: upper limit must be positive");
  if (options.max_level < 1) throw std::invalid_argument("tanh_sinh: max_level must be >= 1");

  const unsigned digits = options.working_digits;
  // Individual samples are dropped once they fall far below the target.
  HighPrecision cutoff = options.tolerance.with_digits(digits) * HighPrecision(1e-8, digits);
  Sampler sampler(f, upper, digits, cutoff);

  HighPrecision h(1.0, digits);
  HighPrecision sum = sampler.centre() + sweep(sampler, h, h, digits);
  HighPrecision estimate = sum;

  QuadratureResult result{estimate, HighPrecision::infinity(digits), 0, 0, false};
  for (int level = 1; level <= options.max_level; ++level) {
    mpfr_div_2ui(h.get(), h.get(), 1, MPFR_RNDN);
    sum += sweep(sampler, h, h + h, digits);
    const HighPrecision next = h * sum;

    result.error_estimate = abs(next - estimate);
    result.value = next;
    result.level = level;
    estimate = next;
    if (level >= options.min_level && result.error_estimate < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.evaluations = sampler.evaluations();
  return result;
}

}  // namespace eulercf
