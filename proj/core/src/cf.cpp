#include "eulercf/cf.hpp"

#include <cmath>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace eulercf {

std::ostream& operator<<(std::ostream& os, const Element& element) {
  return os << "(" << element.a << ", " << element.b << ")";
}

GeneralizedCF::GeneralizedCF(BigRational b0, Generator generator, std::optional<std::size_t> depth_hint)
    : b0_(std::move(b0)),
      generator_(std::make_shared<const Generator>(std::move(generator))),
      depth_hint_(depth_hint) {
  if (!*generator_) throw std::invalid_argument("GeneralizedCF: empty generator");
}

GeneralizedCF GeneralizedCF::finite(BigRational b0, std::vector<Element> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].a.is_zero()) {
      throw std::invalid_argument("GeneralizedCF: zero partial numerator at level " + std::to_string(i + 1));
    }
  }
  const std::size_t depth = elements.size();
  auto shared = std::make_shared<const std::vector<Element>>(std::move(elements));
  return GeneralizedCF(
      std::move(b0),
      [shared](std::size_t k) -> std::optional<Element> {
        if (k == 0 || k > shared->size()) return std::nullopt;
        return (*shared)[k - 1];
      },
      depth);
}

std::optional<Element> GeneralizedCF::element(std::size_t k) const {
  if (k == 0) throw std::out_of_range("GeneralizedCF: elements are indexed from 1");
  if (depth_hint_ && k > *depth_hint_) return std::nullopt;
  std::optional<Element> e = (*generator_)(k);
  if (e && e->a.is_zero()) {
    throw std::domain_error("GeneralizedCF: generator produced a zero partial numerator at level " +
                            std::to_string(k));
  }
  return e;
}

std::vector<Element> GeneralizedCF::elements(std::size_t count) const {
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    auto e = element(k);
    if (!e) break;
    out.push_back(std::move(*e));
  }
  return out;
}

ConvergentStream::ConvergentStream(GeneralizedCF cf)
    : cf_(std::move(cf)), prev_p_(1), prev_q_(0) {
  current_.level = 0;
  current_.p = cf_.b0();
  current_.q = 1;
  current_.value = cf_.b0();
}

bool ConvergentStream::advance() {
  const std::size_t k = current_.level + 1;
  std::optional<Element> e = cf_.element(k);
  if (!e) return false;

  BigRational p = e->b * current_.p + e->a * prev_p_;
  BigRational q = e->b * current_.q + e->a * prev_q_;
  prev_p_ = std::move(current_.p);
  prev_q_ = std::move(current_.q);

  current_.level = k;
  current_.value.reset();
  if (!q.is_zero()) current_.value = p / q;
  current_.p = std::move(p);
  current_.q = std::move(q);
  return true;
}

std::vector<Convergent> convergents(const GeneralizedCF& cf, std::size_t n) {
  ConvergentStream stream(cf);
  std::vector<Convergent> out;
  out.reserve(n + 1);
  out.push_back(stream.current());
  while (out.size() <= n && stream.advance()) out.push_back(stream.current());
  return out;
}

Convergent convergent_at(const GeneralizedCF& cf, std::size_t k) {
  ConvergentStream stream(cf);
  while (stream.current().level < k) {
    if (!stream.advance()) {
      throw std::out_of_range("convergent_at: fraction ends at level " + std::to_string(stream.current().level));
    }
  }
  return stream.current();
}

std::string_view to_string(Termination termination) {
  switch (termination) {
    case Termination::tolerance_met: return "tolerance_met";
    case Termination::max_depth: return "max_depth";
    case Termination::divergence_detected: return "divergence_detected";
    case Termination::undefined_convergent_run: return "undefined_convergent_run";
  }
  return "unknown";
}

const Convergent* EvalReport::last_defined() const {
  for (auto it = convergents.rbegin(); it != convergents.rend(); ++it) {
    if (it->value) return &*it;
  }
  return nullptr;
}

namespace {

struct Difference {
  std::size_t level;
  HighPrecision magnitude;
  int sign;
};

// The oldest entry is the reference; the window must show a decrease from it
// to the newest, and a one-signed (monotone) run must decay fast enough for
// its tail to be summable in practice.
bool window_diverges(const std::deque<Difference>& window, double min_monotone_decay) {
  const Difference& oldest = window.front();
  const Difference& newest = window.back();
  if (newest.magnitude >= oldest.magnitude) return true;

  const int sign = oldest.sign;
  for (const Difference& d : window) {
    if (d.sign != sign) return false;
  }
  if (newest.magnitude.sign() == 0) return false;
  const double log_ratio = log(oldest.magnitude / newest.magnitude).to_double();
  const double log_levels = std::log(static_cast<double>(newest.level) / static_cast<double>(oldest.level));
  return log_ratio < min_monotone_decay * log_levels;
}

}  // namespace

EvalReport eval_to_tolerance(const GeneralizedCF& cf, const EvalOptions& options) {
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("eval_to_tolerance: tolerance must be positive");
  if (options.max_depth == 0) throw std::invalid_argument("eval_to_tolerance: max_depth must be positive");

  EvalReport report;
  report.est_error = HighPrecision::infinity(options.digits);

  ConvergentStream stream(cf);
  report.convergents.push_back(stream.current());

  std::deque<Difference> window;
  std::size_t tolerance_hits = 0;
  std::size_t undefined_run = 0;
  std::size_t difference_count = 0;
  int last_sign = 0;
  bool alternating = true;

  report.termination = Termination::max_depth;
  while (report.convergents.size() <= options.max_depth) {
    if (!stream.advance()) break;
    report.convergents.push_back(stream.current());
    const Convergent& current = report.convergents.back();

    if (!current.value) {
      tolerance_hits = 0;
      if (++undefined_run > options.max_undefined_run) {
        report.termination = Termination::undefined_convergent_run;
        break;
      }
      continue;
    }
    undefined_run = 0;

    const Convergent& previous = report.convergents[report.convergents.size() - 2];
    if (!previous.value) continue;

    const BigRational delta = *current.value - *previous.value;
    const int sign = delta.sign();
    HighPrecision magnitude(delta.abs(), options.digits);

    ++difference_count;
    if (sign == 0 || (last_sign != 0 && sign == last_sign)) alternating = false;
    last_sign = sign;
    report.est_error = magnitude;

    tolerance_hits = magnitude < options.tolerance ? tolerance_hits + 1 : 0;
    if (tolerance_hits >= 2) {
      report.termination = Termination::tolerance_met;
      break;
    }

    if (options.divergence_window > 0) {
      window.push_back({current.level, std::move(magnitude), sign});
      if (window.size() > options.divergence_window + 1) window.pop_front();
      if (window.size() == options.divergence_window + 1 &&
          window_diverges(window, options.min_monotone_decay)) {
        report.termination = Termination::divergence_detected;
        break;
      }
    }
  }

  report.bracketing = difference_count >= 2 && alternating;
  if (const Convergent* last = report.last_defined()) {
    report.final_value = HighPrecision(*last->value, options.digits);
  }
  return report;
}

}  // namespace eulercf
