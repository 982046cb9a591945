#include "eulercf/oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace eulercf {

namespace {

constexpr unsigned kGuardDigits = 20;

HighPrecision hp(const BigRational& value, unsigned digits) { return HighPrecision(value, digits); }

HighPrecision one(unsigned digits) { return HighPrecision(1.0, digits); }

/// base^exponent for base > 0.
HighPrecision power(const HighPrecision& base, const BigRational& exponent, unsigned digits) {
  if (exponent.is_zero()) return one(digits);
  if (exponent == BigRational(1)) return base.with_digits(digits);
  return exp(hp(exponent, digits) * log(base));
}

HighPrecision power_from_log(const HighPrecision& log_base, const BigRational& exponent, unsigned digits) {
  if (exponent.is_zero()) return one(digits);
  return exp(hp(exponent, digits) * log_base);
}

HighPrecision tolerance_for(unsigned digits, unsigned working) {
  HighPrecision tol(10.0, working);
  mpfr_pow_si(tol.get(), tol.get(), -static_cast<long>(digits), MPFR_RNDN);
  return tol;
}

QuadratureResult integrate(const EndpointIntegrand& f, const HighPrecision& upper, unsigned digits) {
  QuadratureOptions options;
  options.working_digits = digits + kGuardDigits;
  options.tolerance = tolerance_for(digits, options.working_digits);
  QuadratureResult result = tanh_sinh(f, upper, options);
  if (!result.converged) {
    throw std::runtime_error("seed quadrature did not reach 1e-" + std::to_string(digits) + " (estimate " +
                             result.error_estimate.sci(3) + ")");
  }
  return result;
}

struct VIParams {
  BigRational a, b, theta, lambda, alpha;
};

QuadratureResult integral_V(const FamilySpec& spec, std::size_t shift, unsigned digits) {
  const unsigned wd = digits + kGuardDigits;
  const BigRational& a = spec.param("a");
  const BigRational& b = spec.param("b");
  const BigRational& c = spec.param("c");
  const BigRational& theta = spec.param("theta");
  const BigRational& lambda = spec.param("lambda");
  const BigRational& alpha = spec.param("alpha");

  // a - b y - c y² = c (r1 - y)(y - r2), r1 = U^θ the positive root.
  const HighPrecision root_disc = sqrt(hp(b * b + BigRational(4) * a * c, wd));
  const HighPrecision two_c = hp(BigRational(2) * c, wd);
  const HighPrecision r1 = (hp(-b, wd) + root_disc) / two_c;
  const HighPrecision r2 = (hp(-b, wd) - root_disc) / two_c;
  const HighPrecision upper = power(r1, theta.reciprocal(), wd);
  const HighPrecision half_upper = upper * HighPrecision(0.5, wd);
  const HighPrecision c_hp = hp(c, wd);
  const HighPrecision theta_hp = hp(theta, wd);
  const BigRational x_exponent = alpha - BigRational(1) + BigRational(static_cast<long>(shift)) * theta;
  const BigRational p_exponent = lambda - BigRational(1);

  EndpointIntegrand f = [=](const HighPrecision& x, const HighPrecision&, const HighPrecision& from_right) {
    const HighPrecision log_x = log(x);
    const HighPrecision y = exp(theta_hp * log_x);
    HighPrecision gap = r1 - y;
    if (x > half_upper) gap = -(r1 * expm1(theta_hp * log1p(-(from_right / upper))));
    const HighPrecision p = c_hp * gap * (y - r2);
    return power_from_log(log_x, x_exponent, wd) * power(p, p_exponent, wd);
  };
  return integrate(f, upper, digits);
}

QuadratureResult integral_VI(const VIParams& q, std::size_t shift, unsigned digits) {
  const unsigned wd = digits + kGuardDigits;
  const HighPrecision a_hp = hp(q.a, wd);
  const HighPrecision b_hp = hp(q.b, wd);
  const HighPrecision theta_hp = hp(q.theta, wd);
  const HighPrecision one_hp = one(wd);
  const HighPrecision half = HighPrecision(0.5, wd);
  const BigRational x_exponent = q.alpha - BigRational(1) + BigRational(static_cast<long>(shift)) * q.theta;
  const BigRational w_exponent = q.lambda - BigRational(1);

  EndpointIntegrand f = [=](const HighPrecision& x, const HighPrecision&, const HighPrecision& from_right) {
    const HighPrecision log_x = log(x);
    const HighPrecision y = exp(theta_hp * log_x);
    HighPrecision gap = one_hp - y;
    if (x > half) gap = -expm1(theta_hp * log1p(-from_right));
    return power_from_log(log_x, x_exponent, wd) * power(gap, w_exponent, wd) / (a_hp + b_hp * y);
  };
  return integrate(f, one_hp, digits);
}

QuadratureResult integral_VII(const BigRational& alpha, const BigRational& lambda, const BigRational& delta,
                              std::size_t shift, unsigned digits) {
  const unsigned wd = digits + kGuardDigits;
  const HighPrecision alpha_hp = hp(alpha, wd);
  const BigRational x_exponent = delta - BigRational(1) + BigRational(static_cast<long>(shift));
  const BigRational w_exponent = lambda - BigRational(1);

  EndpointIntegrand f = [=](const HighPrecision& x, const HighPrecision&, const HighPrecision& from_right) {
    return power_from_log(log(x), x_exponent, wd) * exp(alpha_hp * x) * power(from_right, w_exponent, wd);
  };
  return integrate(f, one(wd), digits);
}

}  // namespace

QuadratureResult seed_integral(const FamilySpec& spec, std::size_t shift, unsigned digits) {
  switch (spec.id) {
    case FamilyId::V: return integral_V(spec, shift, digits);
    case FamilyId::VI:
      return integral_VI({spec.param("a"), spec.param("b"), spec.param("theta"), spec.param("lambda"),
                          spec.param("alpha")},
                         shift, digits);
    case FamilyId::VII:
      return integral_VII(spec.param("alpha"), spec.param("lambda"), spec.param("delta"), shift, digits);
    case FamilyId::II:
    case FamilyId::II_MN: {
      const Head& head = *spec.head;
      const BigRational& alpha = head.b0;
      const BigRational beta = head.a1 / alpha;
      return integral_VI({alpha, beta, 1, 1, 1}, shift, digits);
    }
    case FamilyId::III:
    case FamilyId::III_LOG: {
      const Head& head = *spec.head;
      // head = (α + β, αβ): α is the root of x² - (α+β)x + αβ with the
      // scheme's f_1 = α.
      const BigRational alpha = spec.scheme.triple(1).f;
      const BigRational beta = head.b0 - alpha;
      if ((alpha + beta).sign() <= 0) {
        throw std::domain_error("seed integral: α + βx² vanishes on [0, 1]");
      }
      return integral_VI({alpha, beta, 2, 1, 1}, shift, digits);
    }
    case FamilyId::IV: return integral_VII(spec.param("alpha"), 1, 1, shift, digits);
    case FamilyId::I:
    case FamilyId::I_SIMPLE: break;
  }
  throw std::invalid_argument("seed integral: family " + std::string(to_string(spec.id)) +
                              " has no integral seeds");
}

SeedPair quadrature_AB(const FamilySpec& spec, unsigned digits) {
  QuadratureResult A = seed_integral(spec, 0, digits);
  QuadratureResult B = seed_integral(spec, 1, digits);
  return {A.value.with_digits(digits), B.value.with_digits(digits)};
}

HighPrecision target_value(const FamilySpec& spec, unsigned digits) {
  const TargetDescriptor& target = spec.target;
  const unsigned wd = digits + 10;
  const auto& args = target.args;
  HighPrecision value(wd);

  switch (target.formula) {
    case TargetFormula::none: throw NoFiniteTarget();
    case TargetFormula::surd: {
      if (args[2].sign() < 0) throw std::domain_error("target is not real: negative discriminant");
      value = hp(args[0], wd) + hp(args[1], wd) * sqrt(hp(args[2], wd));
      break;
    }
    case TargetFormula::log_ratio: {
      if (args[1].sign() <= 0) throw std::domain_error("target is not real: logarithm of a non-positive number");
      value = hp(args[0], wd) / log(hp(args[1], wd));
      break;
    }
    case TargetFormula::atan_surd: {
      const HighPrecision alpha = hp(args[0], wd);
      const HighPrecision beta = hp(args[1], wd);
      value = beta + sqrt(alpha * beta) / atan(sqrt(beta / alpha));
      break;
    }
    case TargetFormula::log_surd: {
      if (!(args[0] > args[1])) throw std::domain_error("target is not real: requires α > γ");
      const HighPrecision alpha = hp(args[0], wd);
      const HighPrecision gamma = hp(args[1], wd);
      const HighPrecision ra = sqrt(alpha);
      const HighPrecision rg = sqrt(gamma);
      value = -gamma + HighPrecision(2.0, wd) * ra * rg / log((ra + rg) / (ra - rg));
      break;
    }
    case TargetFormula::exp_ratio: {
      const HighPrecision alpha = hp(args[0], wd);
      value = alpha / expm1(alpha);
      break;
    }
    case TargetFormula::quad_v:
    case TargetFormula::quad_vi:
    case TargetFormula::quad_vii: {
      const SeedPair seeds = quadrature_AB(spec, wd);
      value = hp(spec.scheme.triple(1).f, wd) * seeds.A / seeds.B;
      break;
    }
  }
  return value.with_digits(digits);
}

std::optional<BigRational> bottom_up_truncation(const GeneralizedCF& cf, std::size_t n) {
  if (n == 0) return cf.b0();
  const std::vector<Element> elements = cf.elements(n);
  if (elements.size() < n) return std::nullopt;

  BigRational tail = elements[n - 1].b;
  for (std::size_t k = n; k >= 1; --k) {
    if (tail.is_zero()) return std::nullopt;
    const BigRational& below = k >= 2 ? elements[k - 2].b : cf.b0();
    tail = below + elements[k - 1].a / tail;
  }
  return tail;
}

std::optional<SeedForms> seed_closed_forms(const FamilySpec& spec, unsigned digits) {
  const unsigned wd = digits + kGuardDigits;
  switch (spec.id) {
    case FamilyId::II:
    case FamilyId::II_MN: {
      const BigRational& alpha = spec.head->b0;
      const BigRational beta = spec.head->a1 / alpha;
      const HighPrecision l = log1p(hp(beta / alpha, wd));
      const HighPrecision A = l / hp(beta, wd);
      const HighPrecision B = hp(beta.reciprocal(), wd) - hp(alpha / (beta * beta), wd) * l;
      return SeedForms{"(1/β) ln((α+β)/α)", "1/β - (α/β²) ln((α+β)/α)", A.with_digits(digits),
                       B.with_digits(digits)};
    }
    case FamilyId::III:
    case FamilyId::III_LOG: {
      const BigRational alpha = spec.scheme.triple(1).f;
      const BigRational beta = spec.head->b0 - alpha;
      const HighPrecision alpha_hp = hp(alpha, wd);
      HighPrecision A(wd);
      std::string a_text;
      if (beta.sign() > 0) {
        const HighPrecision beta_hp = hp(beta, wd);
        A = atan(sqrt(beta_hp / alpha_hp)) / sqrt(alpha_hp * beta_hp);
        a_text = "(1/√(αβ)) atan√(β/α)";
      } else {
        const BigRational gamma = -beta;
        if (!(alpha > gamma)) return std::nullopt;
        const HighPrecision ra = sqrt(alpha_hp);
        const HighPrecision rg = sqrt(hp(gamma, wd));
        A = log((ra + rg) / (ra - rg)) / (HighPrecision(2.0, wd) * ra * rg);
        a_text = "(1/(2√(αγ))) ln((√α+√γ)/(√α-√γ))";
      }
      const HighPrecision B = hp(beta.reciprocal(), wd) - hp(alpha / beta, wd) * A;
      return SeedForms{a_text, "1/β - (α/β)A", A.with_digits(digits), B.with_digits(digits)};
    }
    case FamilyId::IV: {
      const BigRational& alpha = spec.param("alpha");
      const HighPrecision alpha_hp = hp(alpha, wd);
      const HighPrecision e_alpha = exp(alpha_hp);
      const HighPrecision A = expm1(alpha_hp) / alpha_hp;
      const HighPrecision B = (hp(alpha - BigRational(1), wd) * e_alpha + one(wd)) / hp(alpha * alpha, wd);
      return SeedForms{"(e^α - 1)/α", "((α-1)e^α + 1)/α²", A.with_digits(digits), B.with_digits(digits)};
    }
    default: return std::nullopt;
  }
}

std::vector<HighPrecision> explicit_terms(const FamilySpec& spec, std::size_t count, unsigned digits) {
  const unsigned wd = digits + kGuardDigits;
  std::optional<SeedForms> seeds = seed_closed_forms(spec, wd);
  if (!seeds) {
    throw std::invalid_argument("explicit_terms: no closed-form seeds for family " + std::string(to_string(spec.id)));
  }

  std::vector<HighPrecision> terms;
  terms.reserve(count);
  if (count == 0) return terms;
  terms.push_back(seeds->A);

  // Each family's integrals obey a two-term reduction; iterate it upward.
  switch (spec.id) {
    case FamilyId::II:
    case FamilyId::II_MN: {
      const BigRational& alpha = spec.head->b0;
      const BigRational beta = spec.head->a1 / alpha;
      for (std::size_t k = 1; k < count; ++k) {
        const BigRational inv_k = BigRational(1) / BigRational(static_cast<long>(k));
        terms.push_back((hp(inv_k, wd) - hp(alpha, wd) * terms.back()) / hp(beta, wd));
      }
      break;
    }
    case FamilyId::III:
    case FamilyId::III_LOG: {
      const BigRational alpha = spec.scheme.triple(1).f;
      const BigRational beta = spec.head->b0 - alpha;
      for (std::size_t k = 1; k < count; ++k) {
        const BigRational inv = BigRational(1) / BigRational(static_cast<long>(2 * k - 1));
        terms.push_back((hp(inv, wd) - hp(alpha, wd) * terms.back()) / hp(beta, wd));
      }
      break;
    }
    case FamilyId::IV: {
      const BigRational& alpha = spec.param("alpha");
      const HighPrecision alpha_hp = hp(alpha, wd);
      const HighPrecision e_over_alpha = exp(alpha_hp) / alpha_hp;
      for (std::size_t k = 1; k < count; ++k) {
        terms.push_back(e_over_alpha - hp(BigRational(static_cast<long>(k)) / alpha, wd) * terms.back());
      }
      break;
    }
    default: break;
  }
  for (HighPrecision& t : terms) t = t.with_digits(digits);
  return terms;
}

namespace {

// atan(1/x) * scale, by the alternating series in exact integers.
mpz_class atan_inverse(unsigned long x, const mpz_class& scale) {
  const mpz_class x2 = mpz_class(x) * x;
  mpz_class power = scale / x;
  mpz_class sum = power;
  for (unsigned long k = 1; power != 0; ++k) {
    power /= x2;
    const mpz_class term = power / (2 * k + 1);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

HighPrecision pi_machin(unsigned digits) {
  const unsigned scaled_digits = digits + 10;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, scaled_digits);
  const mpz_class pi_scaled = 16 * atan_inverse(5, scale) - 4 * atan_inverse(239, scale);
  return HighPrecision(BigRational(pi_scaled, scale), digits);
}

}  // namespace eulercf
