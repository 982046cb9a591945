#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eulercf/bigrational.hpp"
#include "eulercf/cf.hpp"
#include "eulercf/high_precision.hpp"
#include "eulercf/kexpr.hpp"

namespace eulercf {

using ScaleFn = std::function<BigRational(std::size_t k)>;

/// Equivalence transformation with c_0 = 1:
///   a_k' = c_k c_{k-1} a_k,  b_k' = c_k b_k,  b0 unchanged.
/// Every defined convergent value is preserved. A zero scale is rejected
/// with std::invalid_argument when its level is generated.
GeneralizedCF equivalence_scale(const GeneralizedCF& cf, ScaleFn scales);

/// b0_new + a1_new / cf. The old b0 becomes the new b_1. Throws
/// std::invalid_argument if a1_new is zero.
GeneralizedCF adjoin_head(const GeneralizedCF& cf, const BigRational& b0_new, const BigRational& a1_new);

struct HeadSplit {
  BigRational b0;
  BigRational a1;
  GeneralizedCF tail;
};

/// Inverse of adjoin_head: cf = b0 + a1 / tail. Throws std::invalid_argument
/// on a fraction of depth 0.
HeadSplit drop_head(const GeneralizedCF& cf);

/// equivalence_scale with c_k = (-1)^k.
GeneralizedCF alternate_signs(const GeneralizedCF& cf);

inline constexpr std::size_t kDefaultClearDepth = 512;

/// Chooses, level by level from k = 1, the least positive c_k that makes
/// (c_k c_{k-1} a_k, c_k b_k) a pair of coprime integers. Levels past
/// `depth` keep c_k = 1.
GeneralizedCF clear_denominators(const GeneralizedCF& cf, std::size_t depth = kDefaultClearDepth);

/// x -> (a x + b) / (c x + d)
struct Mobius {
  BigRational a{1};
  BigRational b{0};
  BigRational c{0};
  BigRational d{1};

  static Mobius identity() { return {}; }
  /// Value map of adjoin_head: x -> b0 + a1 / x.
  static Mobius adjoin(const BigRational& b0, const BigRational& a1);
  /// Value map of drop_head: x -> a1 / (x - b0).
  static Mobius drop(const BigRational& b0, const BigRational& a1);

  /// (this o inner)(x) = this(inner(x)).
  Mobius after(const Mobius& inner) const;

  bool is_identity() const;
  std::optional<BigRational> apply(const BigRational& x) const;
  HighPrecision apply(const HighPrecision& x) const;

  friend bool operator==(const Mobius&, const Mobius&) = default;
};

// Transform directives, as accepted on the command line and used by
// catalog recipes.
struct ScaleStep {
  KExpression scale;
};
struct AdjoinStep {
  BigRational b0;
  BigRational a1;
};
struct DropStep {};
struct AlternateSignsStep {};
struct ClearDenominatorsStep {
  std::size_t depth = kDefaultClearDepth;
};

using TransformStep = std::variant<ScaleStep, AdjoinStep, DropStep, AlternateSignsStep, ClearDenominatorsStep>;

/// Parses `scale:k->EXPR`, `adjoin:B0,A1`, `drop`, `altsign`,
/// `cleardenom` or `cleardenom:DEPTH`. Throws std::invalid_argument.
TransformStep parse_directive(std::string_view text);
std::string to_string(const TransformStep& step);

struct AppliedStep {
  GeneralizedCF cf;
  /// Maps the input's value to the output's value.
  Mobius value_map;
  /// Output level = input level + shift (+1 adjoin, -1 drop, 0 otherwise).
  int level_shift = 0;
};

AppliedStep apply_step(const GeneralizedCF& cf, const TransformStep& step);

struct AppliedRecipe {
  GeneralizedCF cf;
  Mobius value_map;
};

AppliedRecipe apply_recipe(const GeneralizedCF& cf, std::span<const TransformStep> steps);

struct InvarianceCheck {
  bool ok = true;
  std::size_t levels_compared = 0;
  std::optional<std::size_t> first_mismatch;
};

/// Compares convergent values of `before` and `after` through the step's
/// level shift and value map, exactly, up to `depth` input levels.
InvarianceCheck check_value_invariance(const GeneralizedCF& before, const AppliedStep& step, std::size_t depth);

}  // namespace eulercf
