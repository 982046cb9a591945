#pragma once

#include <cstddef>
#include <functional>

#include "eulercf/high_precision.hpp"

namespace eulercf {

/// Integrand on (0, U). Besides x it receives the distances x - 0 and U - x,
/// each computed without cancellation, so endpoint-singular factors such as
/// (1 - x)^(λ-1) can be formed accurately.
using EndpointIntegrand =
    std::function<HighPrecision(const HighPrecision& x, const HighPrecision& from_left, const HighPrecision& from_right)>;

struct QuadratureOptions {
  /// Stop once two successive levels differ by less than this.
  HighPrecision tolerance = HighPrecision(1e-40, kDefaultDigits);
  /// Decimal digits carried by the nodes and the running sums.
  unsigned working_digits = kDefaultDigits + 20;
  /// Step h = 2^-level; level 0 uses h = 1.
  int max_level = 12;
  int min_level = 3;
};

struct QuadratureResult {
  HighPrecision value;
  /// |S_level - S_(level-1)| at the last level.
  HighPrecision error_estimate;
  int level = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Tanh-sinh (double-exponential) quadrature of f over (0, upper):
///   x = U/2 (1 + tanh(π/2 sinh t)).
/// Never evaluates f at an endpoint.
QuadratureResult tanh_sinh(const EndpointIntegrand& f, const HighPrecision& upper, const QuadratureOptions& options);

}  // namespace eulercf
