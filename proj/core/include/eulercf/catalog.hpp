#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulercf/bigrational.hpp"
#include "eulercf/cf.hpp"
#include "eulercf/families.hpp"
#include "eulercf/transforms.hpp"

namespace eulercf {

enum class Expectation {
  /// The fraction converges to the family target mapped through the recipe.
  family_target,
  /// The fraction converges to `limit`, which differs from the closed form
  /// (the recurrence picks out its minimal solution).
  fixed_limit,
  /// The fraction has no limit; evaluation must report divergence.
  divergence,
};

std::string_view to_string(Expectation expectation);

struct CatalogEntry {
  std::string name;
  std::string description;
  FamilySpec family;
  /// Applied to family.cf() in order.
  std::vector<TransformStep> recipe;
  Expectation expectation = Expectation::family_target;
  std::optional<BigRational> limit;
  /// Human-readable limit, e.g. "4/π".
  std::string expected_text;
  /// Acceptance bound on |value - expected|.
  double tolerance = 1e-30;
  /// Stopping tolerance handed to eval_to_tolerance.
  double stop_tolerance = 1e-32;
  std::size_t max_depth = 200;

  AppliedRecipe build() const;
  GeneralizedCF cf() const { return build().cf; }
};

/// All named identities, in a stable order.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_entry(std::string_view name);

std::vector<const CatalogEntry*> entries_of(FamilyId id);

}  // namespace eulercf
