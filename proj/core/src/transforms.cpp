#include "eulercf/transforms.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace eulercf {

GeneralizedCF equivalence_scale(const GeneralizedCF& cf, ScaleFn scales) {
  if (!scales) throw std::invalid_argument("equivalence_scale: empty scale function");
  auto checked = [scales = std::move(scales)](std::size_t k) {
    if (k == 0) return BigRational(1);
    BigRational c = scales(k);
    if (c.is_zero()) throw std::invalid_argument("equivalence_scale: zero scale at level " + std::to_string(k));
    return c;
  };
  return GeneralizedCF(
      cf.b0(),
      [cf, checked](std::size_t k) -> std::optional<Element> {
        std::optional<Element> e = cf.element(k);
        if (!e) return std::nullopt;
        const BigRational c = checked(k);
        return Element{c * checked(k - 1) * e->a, c * e->b};
      },
      cf.depth_hint());
}

GeneralizedCF adjoin_head(const GeneralizedCF& cf, const BigRational& b0_new, const BigRational& a1_new) {
  if (a1_new.is_zero()) throw std::invalid_argument("adjoin_head: partial numerator must be nonzero");
  std::optional<std::size_t> depth;
  if (cf.depth_hint()) depth = *cf.depth_hint() + 1;
  return GeneralizedCF(
      b0_new,
      [cf, a1_new](std::size_t k) -> std::optional<Element> {
        if (k == 1) return Element{a1_new, cf.b0()};
        return cf.element(k - 1);
      },
      depth);
}

HeadSplit drop_head(const GeneralizedCF& cf) {
  std::optional<Element> first = cf.element(1);
  if (!first) throw std::invalid_argument("drop_head: fraction has no elements");
  std::optional<std::size_t> depth;
  if (cf.depth_hint()) depth = *cf.depth_hint() - 1;
  GeneralizedCF tail(
      first->b, [cf](std::size_t k) { return cf.element(k + 1); }, depth);
  return HeadSplit{cf.b0(), first->a, std::move(tail)};
}

GeneralizedCF alternate_signs(const GeneralizedCF& cf) {
  return equivalence_scale(cf, [](std::size_t k) { return BigRational(k % 2 == 0 ? 1 : -1); });
}

GeneralizedCF clear_denominators(const GeneralizedCF& cf, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("clear_denominators: depth must be positive");
  auto scales = std::make_shared<std::vector<BigRational>>();
  scales->reserve(depth);
  BigRational previous(1);
  for (std::size_t k = 1; k <= depth; ++k) {
    std::optional<Element> e = cf.element(k);
    if (!e) break;
    const BigRational u = previous * e->a;
    const BigRational& v = e->b;
    mpz_class common_den;
    mpz_lcm(common_den.get_mpz_t(), u.mpq().get_den_mpz_t(), v.mpq().get_den_mpz_t());
    const mpz_class u_int = u.numerator() * (common_den / u.denominator());
    const mpz_class v_int = v.numerator() * (common_den / v.denominator());
    mpz_class content;
    mpz_gcd(content.get_mpz_t(), u_int.get_mpz_t(), v_int.get_mpz_t());
    BigRational c(common_den, content);
    scales->push_back(c);
    previous = std::move(c);
  }
  std::shared_ptr<const std::vector<BigRational>> frozen = std::move(scales);
  return equivalence_scale(cf, [frozen](std::size_t k) {
    return k <= frozen->size() ? (*frozen)[k - 1] : BigRational(1);
  });
}

Mobius Mobius::adjoin(const BigRational& b0, const BigRational& a1) { return {b0, a1, 1, 0}; }

Mobius Mobius::drop(const BigRational& b0, const BigRational& a1) { return {0, a1, 1, -b0}; }

Mobius Mobius::after(const Mobius& inner) const {
  return {a * inner.a + b * inner.c, a * inner.b + b * inner.d, c * inner.a + d * inner.c,
          c * inner.b + d * inner.d};
}

bool Mobius::is_identity() const {
  // Projective: any nonzero multiple of the identity matrix.
  return b.is_zero() && c.is_zero() && a == d && !a.is_zero();
}

std::optional<BigRational> Mobius::apply(const BigRational& x) const {
  const BigRational den = c * x + d;
  if (den.is_zero()) return std::nullopt;
  return (a * x + b) / den;
}

HighPrecision Mobius::apply(const HighPrecision& x) const {
  const unsigned digits = x.digits();
  const HighPrecision num = HighPrecision(a, digits) * x + HighPrecision(b, digits);
  const HighPrecision den = HighPrecision(c, digits) * x + HighPrecision(d, digits);
  return num / den;
}

TransformStep parse_directive(std::string_view raw) {
  std::string_view text = raw;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);

  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const auto bad = [&](const std::string& why) {
    return std::invalid_argument("invalid directive '" + std::string(raw) + "': " + why);
  };

  if (name == "drop" || name == "altsign") {
    if (colon != std::string_view::npos) throw bad("takes no arguments");
    if (name == "drop") return DropStep{};
    return AlternateSignsStep{};
  }
  if (name == "cleardenom") {
    if (colon == std::string_view::npos) return ClearDenominatorsStep{};
    try {
      const BigRational depth = BigRational::parse(args);
      if (!depth.is_integer() || depth.sign() <= 0 || !depth.numerator().fits_ulong_p()) {
        throw bad("depth must be a positive integer");
      }
      return ClearDenominatorsStep{depth.numerator().get_ui()};
    } catch (const std::invalid_argument& e) {
      throw bad(e.what());
    }
  }
  if (name == "adjoin") {
    const auto comma = args.find(',');
    if (colon == std::string_view::npos || comma == std::string_view::npos) throw bad("expected adjoin:B0,A1");
    try {
      AdjoinStep step{BigRational::parse(args.substr(0, comma)), BigRational::parse(args.substr(comma + 1))};
      if (step.a1.is_zero()) throw bad("partial numerator must be nonzero");
      return step;
    } catch (const std::invalid_argument& e) {
      throw bad(e.what());
    }
  }
  if (name == "scale") {
    std::string_view body = args;
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    if (colon == std::string_view::npos || body.substr(0, 3) != "k->") throw bad("expected scale:k->EXPR");
    try {
      return ScaleStep{KExpression::parse(body.substr(3))};
    } catch (const std::invalid_argument& e) {
      throw bad(e.what());
    }
  }
  throw bad("unknown directive");
}

std::string to_string(const TransformStep& step) {
  struct Visitor {
    std::string operator()(const ScaleStep& s) const { return "scale:k->" + s.scale.text(); }
    std::string operator()(const AdjoinStep& s) const { return "adjoin:" + s.b0.str() + "," + s.a1.str(); }
    std::string operator()(const DropStep&) const { return "drop"; }
    std::string operator()(const AlternateSignsStep&) const { return "altsign"; }
    std::string operator()(const ClearDenominatorsStep& s) const {
      return s.depth == kDefaultClearDepth ? "cleardenom" : "cleardenom:" + std::to_string(s.depth);
    }
  };
  return std::visit(Visitor{}, step);
}

AppliedStep apply_step(const GeneralizedCF& cf, const TransformStep& step) {
  struct Visitor {
    const GeneralizedCF& cf;
    AppliedStep operator()(const ScaleStep& s) const {
      KExpression scale = s.scale;
      return {equivalence_scale(cf, [scale](std::size_t k) { return scale(k); }), Mobius::identity(), 0};
    }
    AppliedStep operator()(const AdjoinStep& s) const {
      return {adjoin_head(cf, s.b0, s.a1), Mobius::adjoin(s.b0, s.a1), 1};
    }
    AppliedStep operator()(const DropStep&) const {
      HeadSplit split = drop_head(cf);
      return {std::move(split.tail), Mobius::drop(split.b0, split.a1), -1};
    }
    AppliedStep operator()(const AlternateSignsStep&) const { return {alternate_signs(cf), Mobius::identity(), 0}; }
    AppliedStep operator()(const ClearDenominatorsStep& s) const {
      return {clear_denominators(cf, s.depth), Mobius::identity(), 0};
    }
  };
  return std::visit(Visitor{cf}, step);
}

AppliedRecipe apply_recipe(const GeneralizedCF& cf, std::span<const TransformStep> steps) {
  AppliedRecipe result{cf, Mobius::identity()};
  for (const TransformStep& step : steps) {
    AppliedStep applied = apply_step(result.cf, step);
    result.cf = std::move(applied.cf);
    result.value_map = applied.value_map.after(result.value_map);
  }
  return result;
}

InvarianceCheck check_value_invariance(const GeneralizedCF& before, const AppliedStep& step, std::size_t depth) {
  const std::vector<Convergent> input = convergents(before, depth);
  const std::vector<Convergent> output = convergents(step.cf, depth + 1);

  InvarianceCheck check;
  for (const Convergent& x : input) {
    const long mapped = static_cast<long>(x.level) + step.level_shift;
    if (mapped < 0 || static_cast<std::size_t>(mapped) >= output.size()) continue;
    const Convergent& y = output[static_cast<std::size_t>(mapped)];

    bool consistent = true;
    if (!x.value) {
      // An undefined input level maps to an undefined level only for
      // equivalence transformations; head operations move the pole.
      if (step.level_shift == 0) consistent = !y.value;
    } else {
      const std::optional<BigRational> image = step.value_map.apply(*x.value);
      consistent = image.has_value() == y.value.has_value() && (!image || *image == *y.value);
    }
    ++check.levels_compared;
    if (!consistent) {
      check.ok = false;
      if (!check.first_mismatch) check.first_mismatch = x.level;
    }
  }
  return check;
}

}  // namespace eulercf
