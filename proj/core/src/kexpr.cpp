#include "eulercf/kexpr.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace eulercf {

struct KExpression::Node {
  enum class Kind { literal, index, negate, add, subtract, multiply, divide, power };
  Kind kind;
  BigRational literal;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = KExpression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  return std::make_shared<const Node>(Node{kind, BigRational{}, std::move(lhs), std::move(rhs)});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("k-expression '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Node::Kind::add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Node::Kind::subtract, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Node::Kind::multiply, lhs, unary());
      } else if (accept('/')) {
        lhs = make(Node::Kind::divide, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Kind::negate, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Node::Kind::power, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'k') {
      ++pos_;
      return make(Node::Kind::index);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      BigRational value;
      try {
        value = BigRational::parse(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument&) {
        fail("malformed number");
      }
      return std::make_shared<const Node>(Node{Node::Kind::literal, std::move(value), nullptr, nullptr});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

BigRational evaluate(const Node& node, std::size_t k) {
  switch (node.kind) {
    case Node::Kind::literal: return node.literal;
    case Node::Kind::index: return BigRational(static_cast<long>(k));
    case Node::Kind::negate: return -evaluate(*node.lhs, k);
    case Node::Kind::add: return evaluate(*node.lhs, k) + evaluate(*node.rhs, k);
    case Node::Kind::subtract: return evaluate(*node.lhs, k) - evaluate(*node.rhs, k);
    case Node::Kind::multiply: return evaluate(*node.lhs, k) * evaluate(*node.rhs, k);
    case Node::Kind::divide: return evaluate(*node.lhs, k) / evaluate(*node.rhs, k);
    case Node::Kind::power: {
      const BigRational exponent = evaluate(*node.rhs, k);
      if (!exponent.is_integer() || !exponent.numerator().fits_slong_p()) {
        throw std::domain_error("k-expression: exponent must be a machine-size integer");
      }
      return pow(evaluate(*node.lhs, k), exponent.numerator().get_si());
    }
  }
  throw std::logic_error("k-expression: unknown node");
}

}  // namespace

KExpression::KExpression(std::string text, std::shared_ptr<const Node> root)
    : text_(std::move(text)), root_(std::move(root)) {}

KExpression KExpression::parse(std::string_view text) {
  Parser parser(text);
  NodePtr root = parser.parse();
  return KExpression(std::string(text), std::move(root));
}

BigRational KExpression::operator()(std::size_t k) const { return evaluate(*root_, k); }

}  // namespace eulercf
