#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "eulercf/bigrational.hpp"
#include "eulercf/high_precision.hpp"

namespace eulercf {

/// One level of a generalized continued fraction: partial numerator `a`
/// and partial denominator `b`.
struct Element {
  BigRational a;
  BigRational b;

  friend bool operator==(const Element&, const Element&) = default;
};

/// "(a, b)"
std::ostream& operator<<(std::ostream& os, const Element& element);

/// b0 + a1/(b1 + a2/(b2 + ...)).
///
/// Elements are produced lazily by a pure generator indexed from k = 1. A
/// generator returning std::nullopt at level k ends the fraction there, and
/// must keep returning std::nullopt for every later level. Partial numerators
/// are never zero; a generator that yields a zero `a` is a contract
/// violation and element() throws std::domain_error. Partial denominators
/// may be zero.
class GeneralizedCF {
 public:
  using Generator = std::function<std::optional<Element>(std::size_t k)>;

  GeneralizedCF(BigRational b0, Generator generator, std::optional<std::size_t> depth_hint = std::nullopt);

  /// Fraction with the given elements only (depth = elements.size()).
  static GeneralizedCF finite(BigRational b0, std::vector<Element> elements);

  const BigRational& b0() const noexcept { return b0_; }

  /// Element k (k >= 1), or std::nullopt past the end of a finite fraction.
  std::optional<Element> element(std::size_t k) const;

  /// Known depth of a finite fraction. Infinite fractions report nullopt.
  std::optional<std::size_t> depth_hint() const noexcept { return depth_hint_; }

  /// First `count` elements (fewer if the fraction ends earlier).
  std::vector<Element> elements(std::size_t count) const;

 private:
  BigRational b0_;
  std::shared_ptr<const Generator> generator_;
  std::optional<std::size_t> depth_hint_;
};

/// p_k / q_k from the fundamental recurrence. `value` is present iff q != 0.
struct Convergent {
  std::size_t level = 0;
  BigRational p;
  BigRational q;
  std::optional<BigRational> value;
};

/// Incremental fundamental recurrence:
///   p_k = b_k p_{k-1} + a_k p_{k-2},  q_k = b_k q_{k-1} + a_k q_{k-2},
/// with p_{-1} = 1, q_{-1} = 0, p_0 = b0, q_0 = 1. Never divides.
class ConvergentStream {
 public:
  explicit ConvergentStream(GeneralizedCF cf);

  const Convergent& current() const noexcept { return current_; }
  const GeneralizedCF& fraction() const noexcept { return cf_; }

  /// Advances one level. Returns false (and stays put) once the fraction
  /// has no further elements.
  bool advance();

 private:
  GeneralizedCF cf_;
  BigRational prev_p_;
  BigRational prev_q_;
  Convergent current_;
};

/// Levels 0..n (fewer if the fraction is finite and shorter).
std::vector<Convergent> convergents(const GeneralizedCF& cf, std::size_t n);

/// Element k of convergents(cf, k). Throws std::out_of_range if the
/// fraction ends before level k.
Convergent convergent_at(const GeneralizedCF& cf, std::size_t k);

enum class Termination {
  tolerance_met,
  max_depth,
  divergence_detected,
  undefined_convergent_run,
};

std::string_view to_string(Termination termination);

struct EvalOptions {
  double tolerance = 1e-30;
  std::size_t max_depth = 2000;
  unsigned digits = kDefaultDigits;
  /// Number of consecutive differences inspected by the divergence check.
  std::size_t divergence_window = 64;
  /// Monotone windows decaying slower than k^-p for p below this are treated
  /// as divergent.
  double min_monotone_decay = 1.5;
  /// More than this many consecutive q = 0 levels stops the evaluation.
  std::size_t max_undefined_run = 2;
};

struct EvalReport {
  std::vector<Convergent> convergents;
  std::optional<HighPrecision> final_value;
  HighPrecision est_error = HighPrecision::infinity();
  bool bracketing = false;
  Termination termination = Termination::max_depth;

  /// Last convergent with a defined value, if any.
  const Convergent* last_defined() const;
};

/// Extends convergents until two consecutive differences |x_k - x_{k-1}|
/// fall below options.tolerance, max_depth is reached, the divergence
/// check fires, or too many consecutive levels have q = 0.
EvalReport eval_to_tolerance(const GeneralizedCF& cf, const EvalOptions& options);

}  // namespace eulercf
