#include "eulercf_tools/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulercf/catalog.hpp"
#include "eulercf/cf.hpp"
#include "eulercf/families.hpp"
#include "eulercf/oracle.hpp"
#include "eulercf/recurrence.hpp"
#include "eulercf/render.hpp"
#include "eulercf/transforms.hpp"
#include "eulercf/verify.hpp"
#include "eulercf_tools/scheme_file.hpp"

namespace eulercf::tools {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned resolve_precision(const std::optional<unsigned>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("CF_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultDigits;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value < 5 || value > 10000) {
    throw UsageError("CF_PRECISION must be an integer between 5 and 10000, got '" + std::string(env) + "'");
  }
  return static_cast<unsigned>(value);
}

std::string format_double(double value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string sci(const std::optional<HighPrecision>& value) { return value ? value->sci(3) : "n/a"; }

// --- sources ---------------------------------------------------------------

struct Source {
  std::string label;
  GeneralizedCF cf;
  const CatalogEntry* entry = nullptr;
};

Source resolve_source(const std::string& name) {
  if (const CatalogEntry* entry = find_entry(name)) return {entry->name, entry->cf(), entry};
  std::error_code ec;
  if (std::filesystem::is_regular_file(name, ec)) {
    return {name, cf_from_recurrence(load_scheme(name)), nullptr};
  }
  throw UsageError("'" + name + "' is neither a catalog name nor a scheme file");
}

// --- list --------------------------------------------------------------------

struct ListArgs {
  std::string family;
  bool json = false;
};

int cmd_list(const ListArgs& args, std::ostream& out) {
  std::optional<FamilyId> filter;
  if (!args.family.empty()) {
    filter = parse_family_id(args.family);
    if (!filter) throw UsageError("unknown family '" + args.family + "'");
  }

  ordered_json rows = ordered_json::array();
  for (const CatalogEntry& e : catalog()) {
    if (filter && e.family.id != *filter) continue;
    if (args.json) {
      ordered_json params = ordered_json::array();
      for (const Param& p : e.family.params) params.push_back({{"name", display_name(p.name)}, {"value", p.value.str()}});
      ordered_json recipe = ordered_json::array();
      for (const TransformStep& step : e.recipe) recipe.push_back(to_string(step));
      rows.push_back({{"name", e.name},
                      {"family", to_string(e.family.id)},
                      {"params", params},
                      {"target_kind", to_string(e.family.target.kind)},
                      {"expected", e.expected_text},
                      {"expectation", to_string(e.expectation)},
                      {"description", e.description},
                      {"recipe", recipe},
                      {"tolerance", e.tolerance},
                      {"max_depth", e.max_depth}});
    } else {
      out << e.name << "  " << to_string(e.family.id) << "  " << e.family.param_summary() << "  "
          << to_string(e.family.target.kind) << "\n";
    }
  }
  if (args.json) out << rows.dump(2) << "\n";
  return kExitOk;
}

// --- eval --------------------------------------------------------------------

struct EvalArgs {
  std::string source;
  std::optional<std::size_t> depth;
  std::optional<double> tolerance;
  std::optional<unsigned> precision;
  std::string format = "csv";
  bool euler_style = false;
};

struct Record {
  std::size_t level;
  std::string p;
  std::string q;
  std::string value;
  std::string abs_diff;
};

/// p, q scaled to coprime integers with q >= 0.
std::pair<mpz_class, mpz_class> cleared(const BigRational& p, const BigRational& q) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), p.mpq().get_den_mpz_t(), q.mpq().get_den_mpz_t());
  mpz_class pi = p.numerator() * (l / p.denominator());
  mpz_class qi = q.numerator() * (l / q.denominator());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), pi.get_mpz_t(), qi.get_mpz_t());
  if (g != 0) {
    pi /= g;
    qi /= g;
  }
  if (qi < 0 || (qi == 0 && pi < 0)) {
    pi = -pi;
    qi = -qi;
  }
  return {pi, qi};
}

std::vector<Record> records_for(const std::vector<Convergent>& convergents, unsigned digits, bool euler) {
  std::vector<Record> rows;
  rows.reserve(convergents.size());
  const Convergent* previous = nullptr;
  for (const Convergent& c : convergents) {
    auto [p, q] = cleared(c.p, c.q);
    Record r{c.level, p.get_str(), q.get_str(), "undef", ""};
    if (c.value) {
      r.value = euler ? euler_style(*c.value) : to_significant(*c.value, digits);
      if (previous && previous->value) r.abs_diff = to_significant((*c.value - *previous->value).abs(), 6);
    }
    rows.push_back(std::move(r));
    previous = &c;
  }
  return rows;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

struct TargetInfo {
  std::optional<HighPrecision> value;
  std::string text;
  std::string unavailable;
};

TargetInfo target_for(const Source& source, unsigned digits) {
  TargetInfo info;
  if (!source.entry) {
    info.unavailable = "no target for a scheme file";
    return info;
  }
  info.text = source.entry->expected_text;
  try {
    info.value = expected_value(*source.entry, digits);
    if (!info.value) info.unavailable = "none (divergent fraction)";
  } catch (const std::exception& e) {
    info.unavailable = e.what();
  }
  return info;
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  const unsigned digits = resolve_precision(args.precision);
  const Source source = resolve_source(args.source);

  std::vector<Convergent> convergents_out;
  std::optional<EvalReport> report;
  if (args.depth && !args.tolerance) {
    convergents_out = convergents(source.cf, *args.depth);
  } else {
    EvalOptions options;
    options.digits = digits;
    options.tolerance = args.tolerance.value_or(source.entry ? source.entry->stop_tolerance : 1e-30);
    options.max_depth = args.depth.value_or(source.entry ? source.entry->max_depth : 2000);
    report = eval_to_tolerance(source.cf, options);
    convergents_out = report->convergents;
  }

  const std::vector<Record> rows = records_for(convergents_out, digits, args.euler_style);
  // The error column is worked out past the display precision so that it stays
  // meaningful when the fraction has converged beyond it.
  const unsigned work = std::max(digits, 50u) + 10;
  const TargetInfo target = target_for(source, work);

  const Convergent* last = nullptr;
  for (auto it = convergents_out.rbegin(); it != convergents_out.rend(); ++it) {
    if (it->value) {
      last = &*it;
      break;
    }
  }
  std::optional<HighPrecision> final_value;
  if (last) final_value = HighPrecision(*last->value, work);
  std::optional<HighPrecision> error;
  if (final_value && target.value) error = abs(*final_value - *target.value);

  const std::size_t depth = convergents_out.back().level;
  if (args.format == "json") {
    ordered_json records = ordered_json::array();
    for (const Record& r : rows) {
      records.push_back({{"level", r.level}, {"p", r.p}, {"q", r.q}, {"value", r.value}, {"abs_diff", r.abs_diff}});
    }
    ordered_json summary;
    summary["source"] = source.label;
    summary["depth"] = depth;
    if (report) {
      summary["termination"] = to_string(report->termination);
      summary["bracketing"] = report->bracketing;
      summary["est_error"] = report->est_error.sci(6);
    }
    summary["final_value"] = final_value ? to_significant(*final_value, digits) : "undef";
    if (target.value) {
      summary["target"] = to_significant(*target.value, digits);
      summary["target_text"] = target.text;
      summary["abs_error"] = error ? error->sci(6) : "n/a";
    } else {
      summary["target"] = nullptr;
      summary["target_note"] = target.unavailable;
    }
    out << ordered_json{{"records", records}, {"summary", summary}}.dump(2) << "\n";
  } else {
    out << "level,p,q,value,abs_diff\n";
    for (const Record& r : rows) {
      out << r.level << ',' << r.p << ',' << r.q << ',' << csv_field(r.value) << ',' << r.abs_diff << "\n";
    }
    out << "# source=" << source.label << " depth=" << depth;
    if (report) {
      out << " termination=" << to_string(report->termination) << " bracketing=" << (report->bracketing ? "true" : "false")
          << " est_error=" << report->est_error.sci(6);
    }
    out << "\n";
    if (target.value) {
      out << "# target=" << to_significant(*target.value, digits) << " (" << target.text << ") |cf-target|="
          << (error ? error->sci(6) : "n/a") << "\n";
    } else {
      out << "# target=" << target.unavailable << "\n";
    }
  }

  if (report && report->termination == Termination::divergence_detected) return kExitDivergence;
  return kExitOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string selector;
  std::optional<unsigned> precision;
  std::optional<std::size_t> depth;
  std::string params;
  std::string report;
  unsigned jobs = 1;
};

std::vector<CatalogEntry> select_entries(const VerifyArgs& args) {
  if (const CatalogEntry* entry = find_entry(args.selector)) {
    if (!args.params.empty()) throw UsageError("--params applies to a family selector, not a catalog entry");
    return {*entry};
  }
  if (args.selector == "all") {
    if (!args.params.empty()) throw UsageError("--params applies to a family selector, not 'all'");
    return catalog();
  }
  const std::optional<FamilyId> id = parse_family_id(args.selector);
  if (!id) throw UsageError("unknown selector '" + args.selector + "' (expected a catalog name, family id or all)");
  if (!args.params.empty()) {
    try {
      return {adhoc_entry(make_family(*id, parse_params(args.params)))};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<CatalogEntry> out;
  for (const CatalogEntry* e : entries_of(*id)) out.push_back(*e);
  if (out.empty()) throw UsageError("no catalog entries for family " + std::string(to_string(*id)));
  return out;
}

std::vector<VerifyResult> run_all(const std::vector<CatalogEntry>& entries, const VerifyOptions& options,
                                  unsigned jobs) {
  std::vector<VerifyResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) results[i] = verify_entry(entries[i], options);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return results;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  VerifyOptions options;
  options.digits = resolve_precision(args.precision);
  options.max_depth = args.depth;
  const std::vector<CatalogEntry> entries = select_entries(args);
  const std::vector<VerifyResult> results = run_all(entries, options, args.jobs);

  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  bool diverged = false;
  ordered_json report_rows = ordered_json::array();
  for (const VerifyResult& r : results) {
    switch (r.verdict) {
      case Verdict::pass: ++passed; break;
      case Verdict::fail: ++failed; break;
      case Verdict::skipped: ++skipped; break;
    }
    if (r.termination == Termination::divergence_detected) diverged = true;

    out << to_string(r.verdict) << "  " << r.name;
    if (r.verdict != Verdict::skipped) {
      out << "  error=" << sci(r.error) << "  tol=" << format_double(r.tolerance) << "  depth=" << r.depth_used
          << "  bracketing=" << (r.bracketing ? "true" : "false") << "  termination=" << to_string(r.termination);
    }
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";

    ordered_json row{{"name", r.name},
                     {"verdict", to_string(r.verdict)},
                     {"termination", to_string(r.termination)},
                     {"depth", r.depth_used},
                     {"bracketing", r.bracketing},
                     {"tolerance", r.tolerance}};
    row["value"] = r.value ? ordered_json(to_significant(*r.value, options.digits)) : ordered_json(nullptr);
    row["expected"] = r.expected ? ordered_json(to_significant(*r.expected, options.digits)) : ordered_json(nullptr);
    row["error"] = r.error ? ordered_json(r.error->sci(6)) : ordered_json(nullptr);
    if (r.closed_form_gap) row["closed_form_gap"] = r.closed_form_gap->sci(6);
    row["note"] = r.note;
    report_rows.push_back(std::move(row));
  }
  out << results.size() << " checked: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";

  if (!args.report.empty()) {
    std::ofstream file(args.report);
    if (!file) throw std::runtime_error("cannot write report '" + args.report + "'");
    const ordered_json doc{{"selector", args.selector},
                           {"precision", options.digits},
                           {"passed", passed},
                           {"failed", failed},
                           {"skipped", skipped},
                           {"results", report_rows}};
    file << doc.dump(2) << "\n";
    if (!file) throw std::runtime_error("cannot write report '" + args.report + "'");
  }

  if (failed > 0) return kExitFailure;
  if (diverged) return kExitDivergence;
  return kExitOk;
}

// --- transform -----------------------------------------------------------------

struct TransformArgs {
  std::string source;
  std::vector<std::string> directives;
  std::size_t depth = 8;
};

/// u*x + v with unit and zero coefficients elided.
std::string linear_text(const BigRational& u, const BigRational& v) {
  std::string out;
  if (!u.is_zero()) {
    if (u == BigRational(-1)) {
      out = "-x";
    } else if (u == BigRational(1)) {
      out = "x";
    } else {
      out = u.str() + "*x";
    }
  }
  if (v.is_zero()) return out.empty() ? "0" : out;
  if (out.empty()) return v.str();
  return out + (v.sign() < 0 ? " - " : " + ") + v.abs().str();
}

std::string mobius_text(const Mobius& m) {
  const std::string num = linear_text(m.a, m.b);
  if (m.c.is_zero() && m.d == BigRational(1)) return "x -> " + num;
  const bool bare_num = m.a.is_zero() || m.b.is_zero();
  return "x -> " + (bare_num ? num : "(" + num + ")") + "/(" + linear_text(m.c, m.d) + ")";
}

void print_elements(const GeneralizedCF& cf, std::size_t depth, std::ostream& out) {
  out << "  " << display(cf, depth) << "\n";
  out << "  b0 = " << cf.b0().str() << "\n";
  std::size_t k = 1;
  for (const Element& e : cf.elements(depth)) {
    out << "  k=" << std::setw(3) << std::left << k++ << std::right << "  a=" << e.a.str() << "  b=" << e.b.str()
        << "\n";
  }
}

int cmd_transform(const TransformArgs& args, std::ostream& out) {
  std::vector<TransformStep> steps;
  for (const std::string& d : args.directives) steps.push_back(parse_directive(d));
  const Source source = resolve_source(args.source);

  out << "input " << source.label << ":\n";
  print_elements(source.cf, args.depth, out);
  if (steps.empty()) {
    out << "no directives; output equals input\n";
    return kExitOk;
  }

  bool all_ok = true;
  GeneralizedCF current = source.cf;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const AppliedStep applied = apply_step(current, steps[i]);
    const InvarianceCheck check = check_value_invariance(current, applied, args.depth);
    out << "step " << i + 1 << ": " << to_string(steps[i]) << "  value map " << mobius_text(applied.value_map)
        << "  invariance through level " << args.depth << ": " << (check.ok ? "ok" : "MISMATCH") << " ("
        << check.levels_compared << " levels compared";
    if (check.first_mismatch) out << ", first mismatch at level " << *check.first_mismatch;
    out << ")\n";
    all_ok = all_ok && check.ok;
    current = applied.cf;
  }
  out << "output:\n";
  print_elements(current, args.depth, out);
  return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized continued fractions from three-term recurrences"};
  app.name("eulercf");
  app.require_subcommand(1);

  ListArgs list_args;
  CLI::App* list = app.add_subcommand("list", "List catalog entries");
  list->add_option("--family", list_args.family, "Only entries of this family (e.g. IV or family_IV)");
  list->add_flag("--json", list_args.json, "Machine-readable output");

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Convergent table of a catalog entry or scheme file");
  eval->add_option("source", eval_args.source, "Catalog name or scheme JSON file")->required();
  eval->add_option("--depth", eval_args.depth, "Last level (alone: fixed table; with --tol: depth cap)")
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--tol", eval_args.tolerance, "Stop when two consecutive differences are below this")
      ->check(CLI::PositiveNumber);
  eval->add_option("--precision", eval_args.precision, "Significant digits of rendered values")
      ->check(CLI::Range(5u, 10000u));
  eval->add_option("--format", eval_args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  eval->add_flag("--euler-style", eval_args.euler_style, "Values truncated to four places with a decimal comma");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Compare fractions against their oracle values");
  verify->add_option("selector", verify_args.selector, "Catalog name, family id (family_VII) or all")->required();
  verify->add_option("--precision", verify_args.precision, "Working precision in digits")
      ->check(CLI::Range(5u, 10000u));
  verify->add_option("--depth", verify_args.depth, "Override the maximum depth")->check(CLI::PositiveNumber);
  verify->add_option("--params", verify_args.params, "Family parameters, e.g. δ=1/2,λ=1/2,α=1");
  verify->add_option("--report", verify_args.report, "Write a JSON report to this path");
  verify->add_option("--jobs", verify_args.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  TransformArgs transform_args;
  CLI::App* transform = app.add_subcommand("transform", "Apply transform directives and check value invariance");
  transform->add_option("source", transform_args.source, "Catalog name or scheme JSON file")->required();
  transform->add_option("directives", transform_args.directives,
                        "scale:k->EXPR, adjoin:B0,A1, drop, altsign, cleardenom[:DEPTH]");
  transform->add_option("--depth", transform_args.depth, "Levels to print and check")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list(list_args, out);
    if (eval->parsed()) return cmd_eval(eval_args, out);
    if (verify->parsed()) return cmd_verify(verify_args, out);
    if (transform->parsed()) return cmd_transform(transform_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace eulercf::tools
