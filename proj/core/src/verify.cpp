#include "eulercf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <utility>

#include "eulercf/oracle.hpp"

namespace eulercf {

std::optional<HighPrecision> expected_value(const CatalogEntry& entry, unsigned digits) {
  switch (entry.expectation) {
    case Expectation::divergence: return std::nullopt;
    case Expectation::fixed_limit: return HighPrecision(*entry.limit, digits);
    case Expectation::family_target: break;
  }
  const HighPrecision target = target_value(entry.family, digits + 10);
  return entry.build().value_map.apply(target).with_digits(digits);
}

CatalogEntry adhoc_entry(FamilySpec spec) {
  CatalogEntry entry{"family_" + std::string(to_string(spec.id)) + "[" + spec.param_summary() + "]",
                     spec.target.text,
                     std::move(spec),
                     {},
                     Expectation::family_target,
                     std::nullopt,
                     {},
                     1e-8,
                     1e-20,
                     2000};
  entry.expected_text = entry.family.target.text;
  if (entry.family.target.kind == TargetKind::divergent) {
    entry.expectation = Expectation::divergence;
    entry.max_depth = 256;
  }
  return entry;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skipped: return "SKIP";
  }
  return "?";
}

namespace {

void evaluate(const CatalogEntry& entry, const VerifyOptions& options, VerifyResult& result) {
  if (entry.expectation == Expectation::family_target && !entry.family.target.real) {
    result.verdict = Verdict::skipped;
    result.note = "target is not real";
    return;
  }

  // Comparisons cannot be finer than the rendering precision allows.
  result.tolerance = std::max(entry.tolerance, std::pow(10.0, 5.0 - static_cast<double>(options.digits)));

  const AppliedRecipe built = entry.build();
  EvalOptions eval;
  eval.tolerance = entry.stop_tolerance;
  eval.max_depth = options.max_depth.value_or(entry.max_depth);
  eval.digits = options.digits;
  const EvalReport report = eval_to_tolerance(built.cf, eval);

  result.termination = report.termination;
  result.depth_used = report.convergents.back().level;
  result.bracketing = report.bracketing;
  result.value = report.final_value;

  if (entry.expectation == Expectation::divergence) {
    const bool diverged = report.termination == Termination::divergence_detected;
    result.verdict = diverged ? Verdict::pass : Verdict::fail;
    result.note = diverged ? "divergence detected as expected" : "expected divergence was not detected";
    return;
  }

  if (report.termination == Termination::divergence_detected ||
      report.termination == Termination::undefined_convergent_run) {
    result.verdict = Verdict::fail;
    result.note = "evaluation stopped: " + std::string(to_string(report.termination));
    return;
  }
  if (!report.final_value) {
    result.verdict = Verdict::fail;
    result.note = "no defined convergent";
    return;
  }

  result.expected = expected_value(entry, options.digits);
  result.error = abs(*report.final_value - *result.expected);
  result.verdict = *result.error < result.tolerance ? Verdict::pass : Verdict::fail;

  if (entry.expectation == Expectation::fixed_limit) {
    try {
      const HighPrecision closed = built.value_map.apply(target_value(entry.family, options.digits));
      result.closed_form_gap = abs(*report.final_value - closed);
      result.note = "closed form " + entry.family.target.text + " differs by " + result.closed_form_gap->sci(6);
    } catch (const std::exception&) {
      // A closed form that cannot be evaluated simply goes unreported.
    }
  }
}

}  // namespace

VerifyResult verify_entry(const CatalogEntry& entry, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyResult result;
  result.name = entry.name;
  result.tolerance = entry.tolerance;
  try {
    evaluate(entry, options, result);
  } catch (const std::exception& e) {
    result.verdict = Verdict::fail;
    result.note = e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace eulercf
