#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "eulercf/bigrational.hpp"

namespace eulercf {

/// A rational-valued expression in the level index k, e.g. "1/(k+1)" or
/// "(-1)^k". Supports + - * / ^ (integer exponents), parentheses, unary
/// minus, integer and decimal literals.
class KExpression {
 public:
  /// Throws std::invalid_argument on a syntax error.
  static KExpression parse(std::string_view text);

  /// Throws std::domain_error on division by zero or a non-integer exponent.
  BigRational operator()(std::size_t k) const;

  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  KExpression(std::string text, std::shared_ptr<const Node> root);

  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace eulercf
