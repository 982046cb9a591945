#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulercf/bigrational.hpp"
#include "eulercf/cf.hpp"
#include "eulercf/recurrence.hpp"

namespace eulercf {

enum class FamilyId { I, I_SIMPLE, II, II_MN, III, III_LOG, IV, V, VI, VII };

std::string_view to_string(FamilyId id);

/// Accepts "III", "iii", "family_III", "family_iii".
std::optional<FamilyId> parse_family_id(std::string_view text);

enum class TargetKind { sqrt_form, log_form, atan_form, exp_form, quadrature_ratio, divergent };

std::string_view to_string(TargetKind kind);

/// Which closed form (or integral ratio) a target evaluates, with its
/// arguments in `args`:
///   surd        args (c0, c1, d):       c0 + c1 sqrt(d)
///   log_ratio   args (s, r):            s / ln r
///   atan_surd   args (alpha, beta):     beta + sqrt(alpha beta) / atan(sqrt(beta/alpha))
///   log_surd    args (alpha, gamma):    -gamma + 2 sqrt(alpha gamma) / ln((sqrt alpha + sqrt gamma)/(sqrt alpha - sqrt gamma))
///   exp_ratio   args (alpha):           alpha / (e^alpha - 1)
///   quad_v      args (a, b, c, theta, lambda, alpha)
///   quad_vi     args (a, b, theta, lambda, alpha)
///   quad_vii    args (alpha, lambda, delta)
///   none        no finite value
enum class TargetFormula { surd, log_ratio, atan_surd, log_surd, exp_ratio, quad_v, quad_vi, quad_vii, none };

struct TargetDescriptor {
  TargetKind kind = TargetKind::divergent;
  TargetFormula formula = TargetFormula::none;
  std::vector<BigRational> args;
  /// False when the closed form leaves the reals (negative discriminant,
  /// logarithm of a negative number). Evaluation is still allowed.
  bool real = true;
  /// Human-readable formula, e.g. "β + √(β² + 4αγ)".
  std::string text;
};

struct Param {
  /// ASCII name: alpha, beta, gamma, delta, epsilon, theta, lambda, a, b, c, m, n.
  std::string name;
  BigRational value;

  friend bool operator==(const Param&, const Param&) = default;
};

/// Greek letter for a Greek ASCII name ("alpha" -> "α"); other names unchanged.
std::string display_name(std::string_view ascii_name);

/// Inverse of display_name; also accepts ASCII names. nullopt if unknown.
std::optional<std::string> canonical_param_name(std::string_view text);

struct Head {
  BigRational b0;
  BigRational a1;
};

/// A parameterized family instance. cf() is the fraction whose limit is
/// `target`: the recurrence fraction, prefixed by `head` where the family
/// supplies one.
struct FamilySpec {
  FamilyId id;
  std::vector<Param> params;
  RecurrenceScheme scheme;
  std::optional<Head> head;
  TargetDescriptor target;

  /// The fraction for f_1 A / B built from the scheme alone.
  GeneralizedCF raw_cf() const;
  GeneralizedCF cf() const;

  /// Throws std::out_of_range for a name the family does not carry.
  const BigRational& param(std::string_view name) const;
  /// "α=1 β=1"
  std::string param_summary() const;
};

// Constructors. Each throws std::invalid_argument when its parameters
// leave the family's domain.

/// f_k = kα, g_k = (k+1)β, h_k = (k+2)γ; target β + √(β² + 4αγ).
FamilySpec family_I(const BigRational& alpha, const BigRational& beta, const BigRational& gamma);
/// Constant rows (1, β, ε): β + ε/(β + ε/(...)); target (β + √(β² + 4ε))/2.
FamilySpec family_I_simple(const BigRational& beta, const BigRational& epsilon);
/// f_k = kα, g_k = (k+1)α - kβ, h_k = (k+1)β, head (α, αβ);
/// target β / ln((α+β)/α). Requires α > 0, α + β > 0, β != 0.
FamilySpec family_II(const BigRational& alpha, const BigRational& beta);
/// family_II(n - m, 2m); target 2m / ln((n+m)/(n-m)). Requires n > m > 0.
FamilySpec family_II_mn(const BigRational& m, const BigRational& n);
/// f_k = (2k-1)α, g_k = (2k+1)α - (2k-1)β, h_k = (2k+1)β, head (α+β, αβ).
/// β > 0 gives an arctangent target, β = -γ < 0 a logarithmic one (id
/// III_LOG), and α = γ an instance with a divergent target. Requires α > 0, β != 0.
FamilySpec family_III(const BigRational& alpha, const BigRational& beta);
/// family_III(m + n, n - m). Requires n > |m|.
FamilySpec family_III_mn(const BigRational& m, const BigRational& n);
/// f_k = k, g_k = k + 1 - α, h_k = α, head (1-α, α); target α/(e^α - 1).
/// Requires α != 0.
FamilySpec family_IV(const BigRational& alpha);
/// Rows ((α+(k-1)θ)a, (α+(k-1)θ+λθ)b, (α+(k-1)θ+2λθ)c); target αa A/B with
/// A, B integrals of x^(α-1)(a - bx^θ - cx^2θ)^(λ-1) (and x^θ times it) over
/// (0, U), U^θ the positive root. Requires a > 0, c != 0, θ, λ, α > 0 and a
/// positive root.
FamilySpec family_V(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& theta,
                    const BigRational& lambda, const BigRational& alpha);
/// Rows ((α+(k-1)θ)a, (α+(k-1)θ+λθ)a - (α+(k-1)θ)b, (α+(k-1)θ+λθ)b); target
/// αa A/B with A = ∫₀¹ x^(α-1)(1-x^θ)^(λ-1)/(a+bx^θ). Requires a > 0,
/// a + b > 0, θ, λ, α > 0.
FamilySpec family_VI(const BigRational& a, const BigRational& b, const BigRational& theta, const BigRational& lambda,
                     const BigRational& alpha);
/// f_k = δ+k-1, g_k = δ+k-1+λ-α, h_k = α; target δA/B with
/// A = ∫₀¹ x^(δ-1) e^(αx) (1-x)^(λ-1). Requires λ > 0, δ > 0, α != 0.
FamilySpec family_VII(const BigRational& alpha, const BigRational& lambda, const BigRational& delta);

/// Builds a family from named parameters (ASCII or Greek names). Family III
/// accepts either {alpha, beta} or {m, n}; III_LOG takes {alpha, gamma}.
/// Throws std::invalid_argument on missing, unknown or out-of-domain
/// parameters.
FamilySpec make_family(FamilyId id, const std::vector<Param>& params);

/// Parses "δ=1/2,λ=1/2,α=1" (or ASCII names). Throws std::invalid_argument.
std::vector<Param> parse_params(std::string_view text);

}  // namespace eulercf
