#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "eulercf/catalog.hpp"
#include "eulercf/cf.hpp"
#include "eulercf/high_precision.hpp"

namespace eulercf {

/// Expected limit of an entry's fraction: the family target pushed through
/// the recipe's value map, or the fixed limit. nullopt for divergent
/// entries. Throws std::domain_error for a non-real target.
std::optional<HighPrecision> expected_value(const CatalogEntry& entry, unsigned digits = kDefaultDigits);

/// Catalog-shaped entry for an arbitrary family instance: no recipe,
/// acceptance tolerance 1e-8, depth 2000.
CatalogEntry adhoc_entry(FamilySpec spec);

struct VerifyOptions {
  unsigned digits = kDefaultDigits;
  /// Overrides the entry's max_depth.
  std::optional<std::size_t> max_depth;
};

enum class Verdict { pass, fail, skipped };

std::string_view to_string(Verdict verdict);

struct VerifyResult {
  std::string name;
  Verdict verdict = Verdict::fail;
  Termination termination = Termination::max_depth;
  std::size_t depth_used = 0;
  bool bracketing = false;
  std::optional<HighPrecision> value;
  std::optional<HighPrecision> expected;
  /// |value - expected|.
  std::optional<HighPrecision> error;
  /// For fixed-limit entries, |value - family closed form|.
  std::optional<HighPrecision> closed_form_gap;
  double tolerance = 0.0;
  std::string note;
  double seconds = 0.0;
};

/// Evaluates the entry's fraction and compares it with its expected limit.
/// Never throws for numerical reasons; failures are reported in the result.
VerifyResult verify_entry(const CatalogEntry& entry, const VerifyOptions& options = {});

}  // namespace eulercf
