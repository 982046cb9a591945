#include "eulercf/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "eulercf/transforms.hpp"

namespace eulercf {

namespace {

struct NameEntry {
  std::string_view ascii;
  std::string_view display;
};

constexpr std::array<NameEntry, 12> kParamNames{{
    {"alpha", "α"},
    {"beta", "β"},
    {"gamma", "γ"},
    {"delta", "δ"},
    {"epsilon", "ε"},
    {"theta", "θ"},
    {"lambda", "λ"},
    {"a", "a"},
    {"b", "b"},
    {"c", "c"},
    {"m", "m"},
    {"n", "n"},
}};

constexpr std::array<std::pair<FamilyId, std::string_view>, 10> kFamilyNames{{
    {FamilyId::I, "I"},
    {FamilyId::I_SIMPLE, "I_SIMPLE"},
    {FamilyId::II, "II"},
    {FamilyId::II_MN, "II_MN"},
    {FamilyId::III, "III"},
    {FamilyId::III_LOG, "III_LOG"},
    {FamilyId::IV, "IV"},
    {FamilyId::V, "V"},
    {FamilyId::VI, "VI"},
    {FamilyId::VII, "VII"},
}};

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

AffineCoefficient affine(BigRational constant, BigRational slope) { return {std::move(constant), std::move(slope)}; }

Param param(std::string name, BigRational value) { return {std::move(name), std::move(value)}; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(FamilyId id) {
  for (const auto& [value, name] : kFamilyNames) {
    if (value == id) return name;
  }
  return "?";
}

std::optional<FamilyId> parse_family_id(std::string_view text) {
  std::string upper;
  for (char ch : trim(text)) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  std::string_view body = upper;
  if (body.starts_with("FAMILY_")) body.remove_prefix(7);
  for (const auto& [value, name] : kFamilyNames) {
    if (body == name) return value;
  }
  return std::nullopt;
}

std::string_view to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::sqrt_form: return "sqrt_form";
    case TargetKind::log_form: return "log_form";
    case TargetKind::atan_form: return "atan_form";
    case TargetKind::exp_form: return "exp_form";
    case TargetKind::quadrature_ratio: return "quadrature_ratio";
    case TargetKind::divergent: return "divergent";
  }
  return "?";
}

std::string display_name(std::string_view ascii_name) {
  for (const NameEntry& entry : kParamNames) {
    if (entry.ascii == ascii_name) return std::string(entry.display);
  }
  return std::string(ascii_name);
}

std::optional<std::string> canonical_param_name(std::string_view text) {
  text = trim(text);
  for (const NameEntry& entry : kParamNames) {
    if (entry.ascii == text || entry.display == text) return std::string(entry.ascii);
  }
  return std::nullopt;
}

GeneralizedCF FamilySpec::raw_cf() const { return cf_from_recurrence(scheme); }

GeneralizedCF FamilySpec::cf() const {
  GeneralizedCF raw = raw_cf();
  if (!head) return raw;
  return adjoin_head(raw, head->b0, head->a1);
}

const BigRational& FamilySpec::param(std::string_view name) const {
  for (const Param& p : params) {
    if (p.name == name) return p.value;
  }
  throw std::out_of_range("family " + std::string(to_string(id)) + " has no parameter '" + std::string(name) + "'");
}

std::string FamilySpec::param_summary() const {
  std::string out;
  for (const Param& p : params) {
    if (!out.empty()) out += ' ';
    out += display_name(p.name) + "=" + p.value.str();
  }
  return out;
}

FamilySpec family_I(const BigRational& alpha, const BigRational& beta, const BigRational& gamma) {
  require(!alpha.is_zero(), "family I requires α != 0");
  require(!gamma.is_zero(), "family I requires γ != 0");
  const BigRational disc = beta * beta + BigRational(4) * alpha * gamma;
  RecurrenceScheme scheme(affine(0, alpha), affine(beta, beta), affine(BigRational(2) * gamma, gamma),
                          "A = x, B = x²/2 at x = (√(β²+4αγ) - β)/(2γ)");
  TargetDescriptor target{TargetKind::sqrt_form, TargetFormula::surd, {beta, 1, disc}, disc.sign() >= 0,
                          "β + √(β² + 4αγ)"};
  return FamilySpec{FamilyId::I,
                    {param("alpha", alpha), param("beta", beta), param("gamma", gamma)},
                    std::move(scheme),
                    std::nullopt,
                    std::move(target)};
}

FamilySpec family_I_simple(const BigRational& beta, const BigRational& epsilon) {
  require(!beta.is_zero() || epsilon.sign() > 0, "family I_SIMPLE requires β != 0 or ε > 0");
  const BigRational disc = beta * beta + BigRational(4) * epsilon;
  RecurrenceScheme scheme(affine(1, 0), affine(beta, 0), affine(epsilon, 0),
                          "T_k = x^(k-1) with 1 = βx + εx²");
  const BigRational half(1, 2);
  TargetDescriptor target{TargetKind::sqrt_form, TargetFormula::surd, {beta * half, half, disc}, disc.sign() >= 0,
                          "(β + √(β² + 4ε))/2"};
  return FamilySpec{FamilyId::I_SIMPLE,
                    {param("beta", beta), param("epsilon", epsilon)},
                    std::move(scheme),
                    std::nullopt,
                    std::move(target)};
}

namespace {

FamilySpec family_II_impl(FamilyId id, std::vector<Param> params, const BigRational& alpha, const BigRational& beta,
                          std::string text) {
  require(alpha.sign() > 0, "family II requires α > 0");
  require((alpha + beta).sign() > 0, "family II requires α + β > 0");
  require(!beta.is_zero(), "family II requires β != 0");
  RecurrenceScheme scheme(affine(0, alpha), affine(alpha, alpha - beta), affine(beta, beta),
                          "A = ∫₀¹ dx/(α+βx), B = ∫₀¹ x dx/(α+βx)");
  TargetDescriptor target{TargetKind::log_form, TargetFormula::log_ratio, {beta, (alpha + beta) / alpha}, true,
                          std::move(text)};
  return FamilySpec{id, std::move(params), std::move(scheme), Head{alpha, alpha * beta}, std::move(target)};
}

}  // namespace

FamilySpec family_II(const BigRational& alpha, const BigRational& beta) {
  return family_II_impl(FamilyId::II, {param("alpha", alpha), param("beta", beta)}, alpha, beta,
                        "β / ln((α+β)/α)");
}

FamilySpec family_II_mn(const BigRational& m, const BigRational& n) {
  require(m.sign() > 0 && n > m, "family II_MN requires n > m > 0");
  return family_II_impl(FamilyId::II_MN, {param("m", m), param("n", n)}, n - m, BigRational(2) * m,
                        "2m / ln((n+m)/(n-m))");
}

namespace {

FamilySpec family_III_impl(std::optional<std::vector<Param>> params, const BigRational& alpha,
                           const BigRational& beta) {
  require(alpha.sign() > 0, "family III requires α > 0");
  require(!beta.is_zero(), "family III requires β != 0");
  RecurrenceScheme scheme(affine(-alpha, BigRational(2) * alpha),
                          affine(alpha + beta, BigRational(2) * (alpha - beta)), affine(beta, BigRational(2) * beta),
                          "A = ∫₀¹ dx/(α+βx²), B = ∫₀¹ x² dx/(α+βx²)");
  Head head{alpha + beta, alpha * beta};

  if (beta.sign() > 0) {
    TargetDescriptor target{TargetKind::atan_form, TargetFormula::atan_surd, {alpha, beta}, true,
                            "β + √(αβ) / atan√(β/α)"};
    return FamilySpec{FamilyId::III,
                      params ? std::move(*params) : std::vector<Param>{param("alpha", alpha), param("beta", beta)},
                      std::move(scheme), std::move(head), std::move(target)};
  }

  const BigRational gamma = -beta;
  std::vector<Param> log_params =
      params ? std::move(*params) : std::vector<Param>{param("alpha", alpha), param("gamma", gamma)};
  if (alpha == gamma) {
    TargetDescriptor target{TargetKind::divergent, TargetFormula::none, {}, false, "none (α = γ)"};
    return FamilySpec{FamilyId::III_LOG, std::move(log_params), std::move(scheme), std::move(head),
                      std::move(target)};
  }
  TargetDescriptor target{TargetKind::log_form, TargetFormula::log_surd, {alpha, gamma}, alpha > gamma,
                          "-γ + 2√(αγ) / ln((√α+√γ)/(√α-√γ))"};
  return FamilySpec{FamilyId::III_LOG, std::move(log_params), std::move(scheme), std::move(head),
                    std::move(target)};
}

}  // namespace

FamilySpec family_III(const BigRational& alpha, const BigRational& beta) {
  return family_III_impl(std::nullopt, alpha, beta);
}

FamilySpec family_III_mn(const BigRational& m, const BigRational& n) {
  require(n > m.abs(), "family III (m, n) requires n > |m|");
  return family_III_impl(std::vector<Param>{param("m", m), param("n", n)}, m + n, n - m);
}

FamilySpec family_IV(const BigRational& alpha) {
  require(!alpha.is_zero(), "family IV requires α != 0");
  RecurrenceScheme scheme(affine(0, 1), affine(BigRational(1) - alpha, 1), affine(alpha, 0),
                          "A = ∫₀¹ e^(αx) dx, B = ∫₀¹ x e^(αx) dx");
  TargetDescriptor target{TargetKind::exp_form, TargetFormula::exp_ratio, {alpha}, true, "α / (e^α - 1)"};
  return FamilySpec{FamilyId::IV, {param("alpha", alpha)}, std::move(scheme), Head{BigRational(1) - alpha, alpha},
                    std::move(target)};
}

FamilySpec family_V(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& theta,
                    const BigRational& lambda, const BigRational& alpha) {
  require(a.sign() > 0, "family V requires a > 0");
  require(!c.is_zero(), "family V requires c != 0");
  require(theta.sign() > 0 && lambda.sign() > 0 && alpha.sign() > 0, "family V requires θ, λ, α > 0");
  const BigRational disc = b * b + BigRational(4) * a * c;
  require(disc.sign() > 0, "family V requires b² + 4ac > 0");
  // The root (-b + √disc)/(2c) is positive when c > 0, or when c < 0 and b > 0.
  require(c.sign() > 0 || b.sign() > 0, "family V requires a positive root of a - by - cy²");

  const BigRational shift = alpha - theta;
  const BigRational lt = lambda * theta;
  RecurrenceScheme scheme(affine(a * shift, a * theta), affine(b * (shift + lt), b * theta),
                          affine(c * (shift + BigRational(2) * lt), c * theta),
                          "A = ∫₀^U x^(α-1)(a-bx^θ-cx^2θ)^(λ-1) dx, B = ∫₀^U x^(α+θ-1)(a-bx^θ-cx^2θ)^(λ-1) dx");
  TargetDescriptor target{TargetKind::quadrature_ratio, TargetFormula::quad_v, {a, b, c, theta, lambda, alpha}, true,
                          "αa·A/B"};
  return FamilySpec{FamilyId::V,
                    {param("a", a), param("b", b), param("c", c), param("theta", theta), param("lambda", lambda),
                     param("alpha", alpha)},
                    std::move(scheme),
                    std::nullopt,
                    std::move(target)};
}

FamilySpec family_VI(const BigRational& a, const BigRational& b, const BigRational& theta, const BigRational& lambda,
                     const BigRational& alpha) {
  require(a.sign() > 0, "family VI requires a > 0");
  require((a + b).sign() > 0, "family VI requires a + b > 0");
  require(theta.sign() > 0 && lambda.sign() > 0 && alpha.sign() > 0, "family VI requires θ, λ, α > 0");

  const BigRational shift = alpha - theta;
  const BigRational lt = lambda * theta;
  RecurrenceScheme scheme(affine(a * shift, a * theta), affine(a * (shift + lt) - b * shift, (a - b) * theta),
                          affine(b * (shift + lt), b * theta),
                          "A = ∫₀¹ x^(α-1)(1-x^θ)^(λ-1)/(a+bx^θ) dx, B = ∫₀¹ x^(α+θ-1)(1-x^θ)^(λ-1)/(a+bx^θ) dx");
  TargetDescriptor target{TargetKind::quadrature_ratio, TargetFormula::quad_vi, {a, b, theta, lambda, alpha}, true,
                          "αa·A/B"};
  return FamilySpec{FamilyId::VI,
                    {param("a", a), param("b", b), param("theta", theta), param("lambda", lambda),
                     param("alpha", alpha)},
                    std::move(scheme),
                    std::nullopt,
                    std::move(target)};
}

FamilySpec family_VII(const BigRational& alpha, const BigRational& lambda, const BigRational& delta) {
  require(lambda.sign() > 0, "family VII requires λ > 0");
  require(delta.sign() > 0, "family VII requires δ > 0");
  require(!alpha.is_zero(), "family VII requires α != 0");
  RecurrenceScheme scheme(affine(delta - BigRational(1), 1), affine(delta - BigRational(1) + lambda - alpha, 1),
                          affine(alpha, 0),
                          "A = ∫₀¹ x^(δ-1)e^(αx)(1-x)^(λ-1) dx, B = ∫₀¹ x^δ e^(αx)(1-x)^(λ-1) dx");
  TargetDescriptor target{TargetKind::quadrature_ratio, TargetFormula::quad_vii, {alpha, lambda, delta}, true,
                          "δ·A/B"};
  return FamilySpec{FamilyId::VII,
                    {param("alpha", alpha), param("lambda", lambda), param("delta", delta)},
                    std::move(scheme),
                    std::nullopt,
                    std::move(target)};
}

namespace {

class ParamReader {
 public:
  ParamReader(FamilyId id, const std::vector<Param>& params) : id_(id), params_(params) {}

  bool has(std::string_view name) const {
    return std::any_of(params_.begin(), params_.end(), [&](const Param& p) { return p.name == name; });
  }

  BigRational get(std::string_view name) {
    for (const Param& p : params_) {
      if (p.name == name) {
        used_.emplace_back(name);
        return p.value;
      }
    }
    throw std::invalid_argument("family " + std::string(to_string(id_)) + " needs parameter " +
                                display_name(name));
  }

  void finish() const {
    for (const Param& p : params_) {
      if (std::find(used_.begin(), used_.end(), p.name) == used_.end()) {
        throw std::invalid_argument("family " + std::string(to_string(id_)) + " has no parameter " +
                                    display_name(p.name));
      }
    }
  }

 private:
  FamilyId id_;
  const std::vector<Param>& params_;
  std::vector<std::string> used_;
};

}  // namespace

FamilySpec make_family(FamilyId id, const std::vector<Param>& params) {
  ParamReader in(id, params);
  auto build = [&]() -> FamilySpec {
    switch (id) {
      case FamilyId::I: {
        BigRational alpha = in.get("alpha"), beta = in.get("beta"), gamma = in.get("gamma");
        return family_I(alpha, beta, gamma);
      }
      case FamilyId::I_SIMPLE: {
        BigRational beta = in.get("beta"), epsilon = in.get("epsilon");
        return family_I_simple(beta, epsilon);
      }
      case FamilyId::II: {
        BigRational alpha = in.get("alpha"), beta = in.get("beta");
        return family_II(alpha, beta);
      }
      case FamilyId::II_MN: {
        BigRational m = in.get("m"), n = in.get("n");
        return family_II_mn(m, n);
      }
      case FamilyId::III:
        if (in.has("m") || in.has("n")) {
          BigRational m = in.get("m"), n = in.get("n");
          return family_III_mn(m, n);
        } else {
          BigRational alpha = in.get("alpha"), beta = in.get("beta");
          return family_III(alpha, beta);
        }
      case FamilyId::III_LOG: {
        BigRational alpha = in.get("alpha"), gamma = in.get("gamma");
        require(gamma.sign() > 0, "family III_LOG requires γ > 0");
        return family_III(alpha, -gamma);
      }
      case FamilyId::IV: return family_IV(in.get("alpha"));
      case FamilyId::V: {
        BigRational a = in.get("a"), b = in.get("b"), c = in.get("c");
        BigRational theta = in.get("theta"), lambda = in.get("lambda"), alpha = in.get("alpha");
        return family_V(a, b, c, theta, lambda, alpha);
      }
      case FamilyId::VI: {
        BigRational a = in.get("a"), b = in.get("b");
        BigRational theta = in.get("theta"), lambda = in.get("lambda"), alpha = in.get("alpha");
        return family_VI(a, b, theta, lambda, alpha);
      }
      case FamilyId::VII: {
        BigRational alpha = in.get("alpha"), lambda = in.get("lambda"), delta = in.get("delta");
        return family_VII(alpha, lambda, delta);
      }
    }
    throw std::invalid_argument("unknown family");
  };
  FamilySpec spec = build();
  in.finish();
  return spec;
}

std::vector<Param> parse_params(std::string_view text) {
  std::vector<Param> out;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("parameter '" + std::string(item) + "' is not of the form name=value");
    }
    const std::optional<std::string> name = canonical_param_name(item.substr(0, eq));
    if (!name) throw std::invalid_argument("unknown parameter name '" + std::string(trim(item.substr(0, eq))) + "'");
    for (const Param& p : out) {
      if (p.name == *name) throw std::invalid_argument("parameter " + display_name(*name) + " given twice");
    }
    out.push_back({*name, BigRational::parse(trim(item.substr(eq + 1)))});
  }
  return out;
}

}  // namespace eulercf
