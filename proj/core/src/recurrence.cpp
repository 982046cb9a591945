#include "eulercf/recurrence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace eulercf {

BigRational AffineCoefficient::at(std::size_t k) const {
  return constant + slope * BigRational(static_cast<long>(k));
}

std::optional<std::size_t> AffineCoefficient::first_zero() const {
  if (slope.is_zero()) {
    if (constant.is_zero()) return std::size_t{1};
    return std::nullopt;
  }
  const BigRational root = -constant / slope;
  if (!root.is_integer() || root.sign() <= 0) return std::nullopt;
  return static_cast<std::size_t>(root.numerator().get_ui());
}

RecurrenceScheme::RecurrenceScheme(AffineCoefficient f, AffineCoefficient g, AffineCoefficient h,
                                   std::string seed_note)
    : seed_note_(std::move(seed_note)) {
  if (auto k = f.first_zero()) {
    throw std::invalid_argument("recurrence scheme: f vanishes at level " + std::to_string(*k));
  }
  affine_ = std::array<AffineCoefficient, 3>{f, g, h};
  rows_ = [f = std::move(f), g = std::move(g), h = std::move(h)](std::size_t k) {
    return CoefficientTriple{k, f.at(k), g.at(k), h.at(k)};
  };
}

RecurrenceScheme::RecurrenceScheme(RowFn rows, std::string seed_note, std::optional<std::size_t> last_row)
    : rows_(std::move(rows)), seed_note_(std::move(seed_note)), last_row_(last_row) {
  if (!rows_) throw std::invalid_argument("recurrence scheme: empty row function");
  if (last_row_ && *last_row_ == 0) throw std::invalid_argument("recurrence scheme: last_row must be >= 1");
}

CoefficientTriple RecurrenceScheme::triple(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("recurrence scheme: rows are indexed from 1");
  CoefficientTriple row = rows_(k);
  if (row.k != k) {
    throw std::invalid_argument("recurrence scheme: row " + std::to_string(k) + " reports index " +
                                std::to_string(row.k));
  }
  if (row.f.is_zero()) {
    throw std::invalid_argument("recurrence scheme: f vanishes at level " + std::to_string(k));
  }
  return row;
}

GeneralizedCF cf_from_recurrence(const RecurrenceScheme& scheme) {
  std::optional<std::size_t> depth;
  if (scheme.affine()) {
    if (auto zero = (*scheme.affine())[2].first_zero()) depth = *zero - 1;
  }
  if (scheme.last_row()) {
    const std::size_t by_rows = *scheme.last_row() - 1;
    depth = depth ? std::min(*depth, by_rows) : by_rows;
  }

  const CoefficientTriple first = scheme.triple(1);
  auto generator = [scheme, depth](std::size_t k) -> std::optional<Element> {
    if (depth && k > *depth) return std::nullopt;
    const CoefficientTriple row = scheme.triple(k);
    const CoefficientTriple next = scheme.triple(k + 1);
    if (row.h.is_zero()) {
      throw std::domain_error("cf_from_recurrence: h vanishes at level " + std::to_string(k) +
                              " but the scheme declares no end there");
    }
    return Element{next.f * row.h, next.g};
  };
  return GeneralizedCF(first.g, std::move(generator), depth);
}

namespace {

void require_terms(std::size_t available, std::size_t k_max) {
  if (available < k_max + 2) {
    throw std::invalid_argument("recurrence_residual: need " + std::to_string(k_max + 2) + " terms, got " +
                                std::to_string(available));
  }
}

}  // namespace

std::vector<BigRational> recurrence_residual(const RecurrenceScheme& scheme, std::span<const BigRational> terms,
                                             std::size_t k_max) {
  require_terms(terms.size(), k_max);
  std::vector<BigRational> residuals;
  residuals.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const CoefficientTriple row = scheme.triple(k);
    residuals.push_back(row.f * terms[k - 1] - row.g * terms[k] - row.h * terms[k + 1]);
  }
  return residuals;
}

std::vector<HighPrecision> recurrence_residual(const RecurrenceScheme& scheme,
                                               std::span<const HighPrecision> terms, std::size_t k_max) {
  require_terms(terms.size(), k_max);
  std::vector<HighPrecision> residuals;
  residuals.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const CoefficientTriple row = scheme.triple(k);
    const unsigned digits = terms[k - 1].digits();
    residuals.push_back(HighPrecision(row.f, digits) * terms[k - 1] - HighPrecision(row.g, digits) * terms[k] -
                        HighPrecision(row.h, digits) * terms[k + 1]);
  }
  return residuals;
}

}  // namespace eulercf
