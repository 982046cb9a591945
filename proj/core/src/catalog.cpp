#include "eulercf/catalog.hpp"

#include <initializer_list>
#include <utility>

namespace eulercf {

std::string_view to_string(Expectation expectation) {
  switch (expectation) {
    case Expectation::family_target: return "family_target";
    case Expectation::fixed_limit: return "fixed_limit";
    case Expectation::divergence: return "divergence";
  }
  return "?";
}

AppliedRecipe CatalogEntry::build() const { return apply_recipe(family.cf(), recipe); }

namespace {

BigRational q(std::string_view text) { return BigRational::parse(text); }

std::vector<TransformStep> steps(std::initializer_list<std::string_view> directives) {
  std::vector<TransformStep> out;
  for (std::string_view d : directives) out.push_back(parse_directive(d));
  return out;
}

struct Accuracy {
  double tolerance;
  double stop_tolerance;
  std::size_t max_depth;
};

constexpr Accuracy kFast{1e-30, 1e-32, 200};

CatalogEntry make(std::string name, std::string description, FamilySpec family, std::vector<TransformStep> recipe,
                  std::string expected_text, Accuracy accuracy = kFast) {
  return CatalogEntry{std::move(name),
                      std::move(description),
                      std::move(family),
                      std::move(recipe),
                      Expectation::family_target,
                      std::nullopt,
                      std::move(expected_text),
                      accuracy.tolerance,
                      accuracy.stop_tolerance,
                      accuracy.max_depth};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;

  // Quadratic surds.
  c.push_back(make("golden_ratio", "1 + 1/(1 + 1/(1 + ...))", family_I_simple(1, 1), {}, "(1+√5)/2"));
  c.push_back(make("surd_general_form", "2 + 6/(3 + 12/(4 + 20/(5 + ...)))", family_I(1, 1, 1), {}, "1+√5"));
  c.push_back(make("surd_integer_root", "4 + 18/(6 + 36/(8 + ...)), limit 2 + √16", family_I(3, 2, 1), {}, "6"));
  c.push_back(make("sqrt_head_form", "head (β, 2αγ) on the general form: β/2 + √(β² + 4αγ)/2",
                   family_I(1, 1, 1), steps({"adjoin:1,2"}), "(1+√5)/2"));
  c.push_back(make("surd_depressed", "head form scaled by 1/(k+1): 1 + 1/(1 + 1/(1 + ...))", family_I(1, 1, 1),
                   steps({"adjoin:1,2", "scale:k->1/(k+1)"}), "(1+√5)/2"));
  c.push_back(make("power_series_root", "1 + 2/(1 + 2/(1 + ...)), root of z = 1 + 2/z", family_I_simple(1, 2), {},
                   "2"));

  // Logarithms.
  c.push_back(make("log2_reciprocal", "1 + 1/(1 + 4/(1 + 9/(1 + 16/(1 + ...))))", family_II(1, 1), {}, "1/ln 2",
                   {1e-3, 1e-30, 2000}));
  {
    CatalogEntry e = make("log3_negative_denominators",
                          "1 + 2/(0 + 8/(-1 + 18/(-2 + ...))): zero and negative denominators; converges to the "
                          "minimal solution 0, not 2/ln 3",
                          family_II(1, 2), {}, "0");
    e.expectation = Expectation::fixed_limit;
    e.limit = BigRational(0);
    c.push_back(std::move(e));
  }
  c.push_back(make("log2_mn_3", "2 + 4/(2 + 16/(2 + 36/(2 + ...)))", family_II_mn(1, 3), {}, "2/ln 2",
                   {2e-3, 1e-30, 2000}));
  c.push_back(make("log2_halved", "the m=1, n=3 form halved: 1 + 1/(1 + 4/(1 + 9/(1 + ...)))", family_II_mn(1, 3),
                   steps({"drop", "adjoin:1,2", "scale:k->1/2"}), "1/ln 2", {1e-3, 1e-30, 2000}));
  c.push_back(make("log_5_3", "3 + 6/(4 + 24/(5 + 54/(6 + ...)))", family_II_mn(1, 4), {}, "2/ln(5/3)"));
  c.push_back(make("log_3_2", "4 + 8/(6 + 32/(8 + 72/(10 + ...)))", family_II_mn(1, 5), {}, "2/ln(3/2)"));
  c.push_back(make("log_3_2_halved", "the m=1, n=5 form halved: 2 + 2/(3 + 8/(4 + 18/(5 + ...)))",
                   family_II_mn(1, 5), steps({"drop", "adjoin:2,4", "scale:k->1/2"}), "1/ln(3/2)"));

  // Arctangents and their logarithmic counterparts.
  c.push_back(make("brouncker_1_plus_4_over_pi", "2 + 1/(2 + 9/(2 + 25/(2 + ...)))", family_III(1, 1), {},
                   "1 + 4/π", {2e-3, 1e-30, 1000}));
  c.push_back(make("brouncker_4_over_pi", "1 + 1/(2 + 9/(2 + 25/(2 + 49/(2 + ...))))", family_III(1, 1),
                   steps({"drop", "adjoin:1,1"}), "4/π", {2e-3, 1e-30, 1000}));
  c.push_back(make("atan_sqrt3", "4 + 3/(8 + 27/(12 + 75/(16 + ...)))", family_III(3, 1), {}, "1 + 6√3/π",
                   {1e-30, 1e-32, 2000}));
  c.push_back(make("atan_mn_general", "α+β = 2n, α-β = 2m with m=1, n=3", family_III_mn(1, 3), {},
                   "2 + √8/atan√(1/2)", {1e-30, 1e-32, 2000}));
  c.push_back(make("log_surd_general", "β = -γ: 1 - 2/(7 - 18/(13 - 50/(19 - ...)))", family_III(2, -1), {},
                   "-1 + 2√2/ln((√2+1)/(√2-1))", {1e-30, 1e-32, 2000}));
  {
    CatalogEntry e = make("log_divergent_alpha_eq_gamma", "α = γ = 1: 0 - 1/(4 - 9/(8 - 25/(12 - ...))) diverges",
                          family_III(1, -1), {}, "none", {0.0, 1e-30, 256});
    e.expectation = Expectation::divergence;
    c.push_back(std::move(e));
  }
  c.push_back(make("log3_surd", "3 - 4/(13 - 36/(23 - 100/(33 - ...)))", family_III(4, -1), {}, "-1 + 4/ln 3",
                   {1e-30, 1e-32, 2000}));
  c.push_back(make("log2_surd", "8 - 9/(28 - 81/(48 - 225/(68 - ...)))", family_III(9, -1), {}, "-1 + 6/ln 2",
                   {1e-30, 1e-32, 2000}));

  // Exponentials.
  c.push_back(make("exp_reciprocal_e_minus_1", "0 + 1/(1 + 2/(2 + 3/(3 + ...)))", family_IV(1), {}, "1/(e-1)"));
  c.push_back(make("e_minus_1", "1 + 1/(1 + (1/2)/(1 + (1/3)/(1 + ...)))", family_IV(1),
                   steps({"drop", "scale:k->1/(k+1)"}), "e-1"));
  c.push_back(make("e_minus_1_cleared", "1 + 1/(1 + 1/(2 + 2/(3 + 3/(4 + ...))))", family_IV(1),
                   steps({"drop", "scale:k->1/(k+1)", "cleardenom"}), "e-1"));
  c.push_back(make("reciprocal_e_minus_2", "1 + 1/(2 + 2/(3 + 3/(4 + ...)))", family_IV(1),
                   steps({"drop", "scale:k->1/(k+1)", "cleardenom", "drop"}), "1/(e-2)"));
  c.push_back(make("euler_e", "2 + 1/(1 + 1/(2 + 2/(3 + 3/(4 + ...))))", family_IV(1),
                   steps({"drop", "cleardenom", "drop", "adjoin:2,1"}), "e"));
  c.push_back(make("exp_alpha2", "-1 + 2/(0 + 4/(1 + 6/(2 + 8/(3 + ...)))), first denominator zero", family_IV(2),
                   {}, "2/(e²-1)"));
  c.push_back(make("exp_alpha2_tail", "0 + 4/(1 + 6/(2 + 8/(3 + ...)))", family_IV(2), steps({"drop"}),
                   "2(e²-1)/(e²+1)"));
  c.push_back(make("exp_alpha_neg1", "2 - 1/(3 - 2/(4 - 3/(5 - ...)))", family_IV(-1), {}, "e/(e-1)"));
  c.push_back(make("exp_alpha_neg1_alternating", "2 + 1/(-3 + 2/(4 + 3/(-5 + ...)))", family_IV(-1),
                   steps({"altsign"}), "e/(e-1)"));
  c.push_back(make("exp_alpha_half", "1/2 + (1/2)/(3/2 + 1/(5/2 + (3/2)/(7/2 + ...)))", family_IV(q("1/2")), {},
                   "(1/2)/(√e-1)"));
  c.push_back(make("exp_sqrt_e_cleared", "1 + 2/(3 + 4/(5 + 6/(7 + 8/(9 + ...))))", family_IV(q("1/2")),
                   steps({"cleardenom", "drop", "adjoin:1,2"}), "1/(√e-1)"));
  c.push_back(make("exp_cbrt_e_cleared", "2 + 3/(5 + 6/(8 + 9/(11 + ...)))", family_IV(q("1/3")),
                   steps({"drop", "adjoin:2,1", "scale:k->3"}), "1/(∛e-1)"));
  c.push_back(make("exp_cbrt_e2_cleared", "1 + 6/(4 + 12/(7 + 18/(10 + ...)))", family_IV(q("2/3")),
                   steps({"drop", "adjoin:1,2", "scale:k->3"}), "2/(∛(e²)-1)"));

  // Integral seeds.
  constexpr Accuracy kQuadrature{1e-8, 1e-20, 2000};
  c.push_back(make("general_quadratic_v", "a=2, b=1, c=1, θ=1, λ=2, α=1 over (0, U)",
                   family_V(2, 1, 1, 1, 2, 1), {}, "αa·A/B", kQuadrature));
  c.push_back(make("beta_integral_vi", "a=1, b=0, θ=1, λ=2, α=1: finite fraction 3",
                   family_VI(1, 0, 1, 2, 1), {}, "αa·A/B", kQuadrature));
  c.push_back(make("beta_integral_vi_singular", "a=2, b=1, θ=1, λ=1/2, α=1/2: endpoint-singular seeds",
                   family_VI(2, 1, 1, q("1/2"), q("1/2")), {}, "αa·A/B", kQuadrature));
  c.push_back(make("exp_abstruse_vii", "δ=1/2, λ=1/2, α=1: endpoint-singular seeds",
                   family_VII(1, q("1/2"), q("1/2")), {}, "δ·A/B", kQuadrature));
  c.push_back(make("exp_vii_integer", "δ=2, λ=3, α=-1", family_VII(-1, 3, 2), {}, "δ·A/B", kQuadrature));

  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<const CatalogEntry*> entries_of(FamilyId id) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : catalog()) {
    if (e.family.id == id) out.push_back(&e);
  }
  return out;
}

}  // namespace eulercf
