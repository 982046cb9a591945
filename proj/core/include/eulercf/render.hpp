#pragma once

#include <cstddef>
#include <string>

#include "eulercf/bigrational.hpp"
#include "eulercf/cf.hpp"
#include "eulercf/high_precision.hpp"

namespace eulercf {

enum class Rounding {
  /// Round half away from zero.
  nearest,
  /// Drop the excess digits (toward zero).
  truncate,
};

/// Exactly `places` digits after the decimal mark, e.g. "2.6667".
std::string to_fixed(const BigRational& x, unsigned places, Rounding rounding = Rounding::nearest, char mark = '.');

/// Four truncated places with a decimal comma: 8/3 -> "2,6666".
std::string euler_style(const BigRational& x);

/// `significant` significant digits, trailing zeros removed. Positional for
/// 1e-7 <= |x| < 1e21, scientific ("1.25e-9") otherwise.
std::string to_significant(const BigRational& x, unsigned significant, Rounding rounding = Rounding::nearest);

/// Same, for a binary float (rendered from its exact value). Non-finite
/// values render as "inf", "-inf" or "nan".
std::string to_significant(const HighPrecision& x, unsigned significant);

/// Nested display through `depth` elements, e.g.
/// "2 + 1/(1 + 1/(2 + 2/(3 + ...)))". Non-integers are parenthesized and
/// negative numerators shown as subtraction.
std::string display(const GeneralizedCF& cf, std::size_t depth);

}  // namespace eulercf
