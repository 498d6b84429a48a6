#include "tracepoincare/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <ostream>
#include <ranges>
#include <sstream>
#include <thread>

#include "tracepoincare/closedforms.hpp"
#include "tracepoincare/denomconj.hpp"
#include "tracepoincare/fixtures.hpp"
#include "tracepoincare/serialization.hpp"

namespace tracepoincare::cli {

using molien::ProblemSpec;
using molien::Ring;
using nlohmann::json;

std::string to_string(Engine e) {
  switch (e) {
    case Engine::Molien: return "molien";
    case Engine::Closed: return "closed";
    case Engine::Derivative: return "derivative";
    case Engine::ResidueSum: return "residue-sum";
  }
  return "unknown";
}

Engine parse_engine(const std::string& text) {
  if (text == "molien") return Engine::Molien;
  if (text == "closed") return Engine::Closed;
  if (text == "derivative") return Engine::Derivative;
  if (text == "residue-sum") return Engine::ResidueSum;
  throw UsageError("unknown engine '" + text + "'");
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TRACE_POINCARE_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "trace-poincare";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "trace-poincare";
  }
  return std::filesystem::temp_directory_path() / "trace-poincare";
}

std::optional<FactoredDenominator> target_denominator(const ProblemSpec& spec) {
  spec.validate();
  if (spec.n == 1) return FactoredDenominator{{1, spec.k}};
  if (auto proven = fixtures::proven_denominator(spec)) return proven;
  return denomconj::conjectured_denominator(spec.n, spec.k, spec.ring).product;
}

CyclotomicExponents target_cyclotomic(const ProblemSpec& spec) {
  if (auto den = target_denominator(spec)) return den->cyclotomic();
  return denomconj::conjectured_denominator(spec.n, spec.k, spec.ring).cyclotomic;
}

// ---------------------------------------------------------------------------
// compute

namespace {

constexpr int kHeadLength = 10;

FactoredRationalFunction closed_form(const ProblemSpec& spec, Engine engine) {
  if (spec.n != 2) throw UsageError("engine " + to_string(engine) + " requires --n 2");
  if (spec.ring == Ring::Mixed) {
    if (engine != Engine::Closed) throw UsageError("engine " + to_string(engine) + " covers the pure ring only");
    if (spec.k < 3) throw UsageError("the mixed closed form requires k >= 3");
    return closedforms::mixed_n2_closed(spec.k);
  }
  switch (engine) {
    case Engine::Closed: return closedforms::pure_n2_closed(spec.k);
    case Engine::Derivative: return closedforms::pure_n2_derivative_formula(spec.k);
    case Engine::ResidueSum: return closedforms::pure_n2_residue_sum(spec.k);
    case Engine::Molien: break;
  }
  throw UsageError("not a closed-form engine");
}

/// Reconstruction that tolerates series whose numerator degree is not the
/// one forced by the functional equation, by allowing degree up to deg(den).
molien::Reconstruction reconstruct_lenient(const TruncatedSeries& series, const CyclotomicExponents& den,
                                           const ProblemSpec& spec, std::vector<std::string>& warnings) {
  molien::Reconstruction r = molien::try_reconstruct(series, den, spec);
  if (r.ok) return r;
  molien::ReconstructOptions relaxed;
  relaxed.numerator_degree = den.degree();
  molien::Reconstruction wide = molien::try_reconstruct(series, den, spec, relaxed);
  if (wide.ok) {
    warnings.push_back("numerator degree " + std::to_string(wide.numerator.degree()) +
                       " differs from deg(den) - k n^2 = " + std::to_string(den.degree() - spec.k * spec.n * spec.n));
    return wide;
  }
  return r;
}

}  // namespace

ComputeResult compute(const ComputeOptions& options) {
  const ProblemSpec& spec = options.spec;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (options.order && *options.order < 0) throw UsageError("--order must be >= 0");
  ComputeResult out;
  out.spec = spec;
  out.engine = options.engine;

  if (options.engine != Engine::Molien) {
    FactoredRationalFunction f = closed_form(spec, options.engine);
    out.order = options.order.value_or(kHeadLength - 1);
    out.cyclotomic = f.denominator.cyclotomic();
    out.head = series_of(f, std::min(out.order, kHeadLength - 1));
    out.function = std::move(f);
    return out;
  }

  out.cyclotomic = target_cyclotomic(spec);
  out.order = options.order.value_or(out.cyclotomic.degree() + 10);
  const TruncatedSeries series = molien::cached_molien_series(spec, out.order, options.cache);
  out.head = series.truncated(kHeadLength - 1);
  if (out.order < out.cyclotomic.degree() + molien::ReconstructOptions{}.guard_margin) {
    out.warnings.push_back("order " + std::to_string(out.order) + " is too small to reconstruct over a denominator of degree " +
                           std::to_string(out.cyclotomic.degree()));
    return out;
  }
  molien::Reconstruction r = reconstruct_lenient(series, out.cyclotomic, spec, out.warnings);
  if (!r.ok) {
    throw molien::ReconstructionFailed("series does not reconstruct over " + tracepoincare::to_string(out.cyclotomic),
                                       r.first_offending_degree);
  }
  if (auto product = out.cyclotomic.try_product_form()) {
    out.function = FactoredRationalFunction{r.numerator, *product};
  } else {
    out.cyclotomic_numerator = r.numerator;
  }
  return out;
}

namespace {

std::string join(std::span<const Rational> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << (is_integer(values[i]) ? values[i].get_num().get_str() : to_fraction_string(values[i]));
  }
  return out.str();
}

}  // namespace

void print(std::ostream& out, const ComputeResult& r) {
  out << "n = " << r.spec.n << ", k = " << r.spec.k << ", ring = " << molien::to_string(r.spec.ring)
      << ", engine = " << to_string(r.engine) << ", order = " << r.order << "\n";
  if (r.function) {
    out << "numerator:   " << to_string(r.function->numerator) << "\n";
    out << "denominator: " << to_string(r.function->denominator) << "\n";
  } else if (r.cyclotomic_numerator) {
    out << "numerator:   " << to_string(*r.cyclotomic_numerator) << "\n";
  }
  out << "cyclotomic:  " << to_string(r.cyclotomic) << "\n";
  out << "series:      " << join(r.head.coefficients()) << (r.order >= kHeadLength ? ", ..." : "") << "\n";
}

json to_json(const ComputeResult& r) {
  json j = {{"n", r.spec.n},
            {"k", r.spec.k},
            {"ring", molien::to_string(r.spec.ring)},
            {"engine", to_string(r.engine)},
            {"order", r.order},
            {"cyclotomic", tracepoincare::to_json(r.cyclotomic)},
            {"series", tracepoincare::to_json(r.head)},
            {"warnings", r.warnings}};
  if (r.function) {
    j["numerator"] = tracepoincare::to_json(r.function->numerator);
    j["denominator"] = tracepoincare::to_json(r.function->denominator);
  } else if (r.cyclotomic_numerator) {
    j["numerator"] = tracepoincare::to_json(*r.cyclotomic_numerator);
    j["denominator"] = nullptr;
  }
  return j;
}

// ---------------------------------------------------------------------------
// verify

std::string to_string(Scope s) {
  switch (s) {
    case Scope::All: return "all";
    case Scope::N2: return "n2";
    case Scope::N3: return "n3";
    case Scope::Conjecture: return "conjecture";
    case Scope::Asymptotics: return "asymptotics";
  }
  return "unknown";
}

Scope parse_scope(const std::string& text) {
  for (Scope s : {Scope::All, Scope::N2, Scope::N3, Scope::Conjecture, Scope::Asymptotics}) {
    if (text == to_string(s)) return s;
  }
  throw UsageError("unknown scope '" + text + "'");
}

namespace {

json spec_json(const ProblemSpec& spec) {
  return {{"n", spec.n}, {"k", spec.k}, {"ring", molien::to_string(spec.ring)}};
}

/// Reconstructs the engine series over the proven denominator and compares
/// with the tabulated numerator when one exists.
void check_engine_against_table(verify::Report& report, const ProblemSpec& spec, int min_order,
                                const molien::SeriesCache* cache) {
  const FactoredDenominator den = *fixtures::proven_denominator(spec);
  const int order = std::max(min_order, den.degree() + 10);
  const TruncatedSeries series = molien::cached_molien_series(spec, order, cache);
  json inputs = spec_json(spec);
  inputs["order"] = order;
  inputs["denominator"] = to_string(den);
  try {
    FactoredRationalFunction f = molien::reconstruct(series, den, spec);
    json witness = {{"numerator", to_json(f.numerator)}};
    bool ok = true;
    if (auto family = fixtures::numerator_family(spec)) {
      if (auto expected = fixtures::numerator(*family, spec.k)) {
        ok = f.numerator == *expected;
        witness["expected"] = to_json(*expected);
      }
    }
    report.add("engine-reconstruction", inputs, ok, witness);
    report.append(verify::check_invariants(f, spec));
  } catch (const molien::ReconstructionFailed& e) {
    report.add("engine-reconstruction", inputs, false,
               {{"error", e.what()}, {"first_offending_degree", e.first_offending_degree()}});
  }
}

void add_identity_checks(verify::Report& report, int k_max, int degree) {
  using closedforms::Identity;
  for (int k = 2; k <= k_max; ++k) {
    for (Identity id : {Identity::SquaredBinomialSum, Identity::AdjacentBinomialSum, Identity::BracketSimplification,
                        Identity::NarayanaSum}) {
      if (id == Identity::NarayanaSum && k < 3) continue;
      closedforms::IdentityReport r = closedforms::verify_identity(id, k, degree);
      json readings = json::array();
      for (const auto& reading : r.readings) {
        readings.push_back({{"reading", reading.reading}, {"holds", reading.holds}, {"first_mismatch", reading.first_mismatch}});
      }
      report.add("identity:" + closedforms::to_string(id), {{"k", k}, {"max_degree", degree}}, r.holds(),
                 {{"readings", readings}});
    }
  }
}

void add_recurrence_checks(verify::Report& report) {
  for (int k = 4; k <= 8; ++k) {
    closedforms::BRecurrenceReport r = closedforms::check_b_recurrence(k);
    report.add("b-recurrence", {{"k", k}}, r.holds, {{"residual", to_json(r.residual)}});
  }
  for (const auto& c : closedforms::check_operator_recurrences(6, 100)) {
    const bool expected_failure = c.name.rfind("adjacent-raw", 0) == 0;
    verify::CheckResult r{"recurrence:" + c.name,
                          {{"k", c.k}, {"order", 100}},
                          c.holds ? verify::Status::Pass : verify::Status::Fail,
                          {{"holds", c.holds}, {"first_mismatch", c.first_mismatch}}};
    if (expected_failure) r.status = verify::Status::Info;
    report.add(std::move(r));
  }
}

verify::Report n2_suite(const molien::SeriesCache* cache) {
  verify::Report report;
  for (int k = 2; k <= 8; ++k) {
    const ProblemSpec spec{2, k, Ring::Pure};
    check_engine_against_table(report, spec, 60, cache);
    const FactoredRationalFunction closed = closedforms::pure_n2_closed(k);
    report.add("closed-form-table", spec_json(spec), closed.numerator == *fixtures::numerator("pure_n2", k),
               {{"numerator", to_json(closed.numerator)}});
    report.add("derivative-formula", spec_json(spec), same_function(closedforms::pure_n2_derivative_formula(k), closed),
               json::object());
    report.add("residue-sum", spec_json(spec), closedforms::residue_sum_sign(k) == 1,
               {{"sign", closedforms::residue_sum_sign(k)}});
    report.add("unreduced-numerator", spec_json(spec),
               closedforms::pure_n2_unreduced_numerator(k) == pow(Polynomial::one_minus_power(1), 2) * closed.numerator,
               json::object());
  }
  for (int k = 3; k <= 10; ++k) {
    const ProblemSpec spec{2, k, Ring::Mixed};
    check_engine_against_table(report, spec, 60, cache);
    const FactoredRationalFunction closed = closedforms::mixed_n2_closed(k);
    report.add("closed-form-table", spec_json(spec), closed.numerator == *fixtures::numerator("mixed_n2", k),
               {{"numerator", to_json(closed.numerator)}});
    const bool even_factor = k % 2 != 0 || divmod(closed.numerator, Polynomial{1, 0, 1}).remainder.is_zero();
    report.add("mixed-numerator-shape", spec_json(spec),
               is_palindromic(closed.numerator) && even_factor &&
                   std::ranges::all_of(std::views::iota(0, closed.numerator.degree() + 1),
                                       [&](int i) { return i % 2 == 0 || closed.numerator[i] == 0; }),
               json::object());
  }
  for (int k = 2; k <= 12; ++k) {
    const Rational c(catalan(static_cast<unsigned long>(k - 2)));
    const Rational pure = closedforms::pure_n2_closed(k).numerator.evaluate(1);
    report.add("catalan", spec_json({2, k, Ring::Pure}), pure == c, {{"value", to_fraction_string(pure)}});
    if (k >= 3) {
      const Rational mixed = closedforms::mixed_n2_closed(k).numerator.evaluate(1);
      report.add("catalan", spec_json({2, k, Ring::Mixed}), mixed == c, {{"value", to_fraction_string(mixed)}});
    }
    report.add("least", spec_json({2, k, Ring::Pure}),
               verify::leastness_certificate(closedforms::pure_n2_closed(k)).least, json::object());
  }
  add_identity_checks(report, 8, 100);
  add_recurrence_checks(report);
  return report;
}

verify::Report n3_suite(const molien::SeriesCache* cache) {
  verify::Report report;
  for (int k = 2; k <= 4; ++k) {
    for (Ring ring : {Ring::Pure, Ring::Mixed}) check_engine_against_table(report, {3, k, ring}, 0, cache);
    const Rational at_one = fixtures::numerator("pure_n3", k)->evaluate(1);
    report.add("value-at-one", spec_json({3, k, Ring::Pure}), at_one == Rational(*fixtures::pure_n3_value_at_one(k)),
               {{"value", to_fraction_string(at_one)}});
  }
  return report;
}

verify::Report conjecture_suite() {
  verify::Report report;
  for (int k = 2; k <= 10; ++k) {
    for (const auto& f : fixtures::proven_denominators(k)) {
      denomconj::ConjecturedDenominator c = denomconj::conjectured_denominator(f.spec.n, k, f.spec.ring);
      denomconj::Comparison cmp = denomconj::compare_denominators(c.cyclotomic, f.denominator.cyclotomic());
      report.add("conjecture:" + f.name, spec_json(f.spec), cmp.equal,
                 {{"conjectured", to_json(c.cyclotomic)}, {"known", to_json(f.denominator)}, {"diff", to_string(cmp)}});
    }
  }
  for (const auto& f : fixtures::tabulated_denominators()) {
    denomconj::ConjecturedDenominator c = denomconj::conjectured_denominator(f.spec.n, f.spec.k, f.spec.ring);
    denomconj::Comparison cmp = denomconj::compare_denominators(c.cyclotomic, f.denominator.cyclotomic());
    report.add("conjecture:" + f.name, spec_json(f.spec), cmp.equal,
               {{"conjectured", to_json(c.cyclotomic)}, {"known", to_json(f.denominator)}, {"diff", to_string(cmp)}});
  }
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= 6; ++k) {
      for (Ring ring : {Ring::Pure, Ring::Mixed}) {
        const ProblemSpec spec{n, k, ring};
        const int e1 = denomconj::conjectured_denominator(n, k, ring).cyclotomic.exponent(1);
        report.add("conjecture-pole-order", spec_json(spec), e1 == (k - 1) * n * n + 1, {{"order", e1}});
        if (k <= 4 && n <= 5) {
          report.add("profile-product", spec_json(spec), denomconj::verify_profile_product(n, k, ring).holds,
                     json::object());
        }
      }
    }
  }
  return report;
}

verify::Report asymptotics_suite(double tolerance) {
  verify::Report report;
  auto add_constant = [&](const ProblemSpec& spec, const FactoredRationalFunction& f, const Rational& expected) {
    verify::AsymptoticEstimate e = verify::asymptotics(f);
    report.add("asymptotic-constant", spec_json(spec), e.A == expected,
               {{"d", e.d}, {"A", to_fraction_string(e.A)}, {"expected", to_fraction_string(expected)}});
    for (bool partial : {false, true}) {
      verify::AsymptoticEstimate pe = verify::asymptotics(f, partial);
      verify::ConstantDenominatorCheck c = verify::check_constant_denominator(pe, spec, partial);
      report.add(verify::CheckResult{partial ? "constant-denominator-partial-sums" : "constant-denominator",
                                     spec_json(spec),
                                     verify::Status::Info,
                                     {{"divides", c.divides},
                                      {"denominator", c.actual.get_str()},
                                      {"bound", c.bound.get_str()}}});
    }
  };
  auto two_power = [](int e) {
    Rational r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= 2;
    return e >= 0 ? r : Rational(1) / r;
  };
  for (int k = 2; k <= 8; ++k) {
    const Rational c(catalan(static_cast<unsigned long>(k - 2)));
    add_constant({2, k, Ring::Pure}, closedforms::pure_n2_closed(k), c * two_power(1 - 2 * k));
    if (k >= 3) add_constant({2, k, Ring::Mixed}, closedforms::mixed_n2_closed(k), c * two_power(3 - 2 * k));
  }
  for (int k = 2; k <= 4; ++k) {
    const ProblemSpec spec{3, k, Ring::Pure};
    FactoredRationalFunction f{*fixtures::numerator("pure_n3", k), *fixtures::proven_denominator(spec)};
    Rational expected = Rational(*fixtures::pure_n3_value_at_one(k)) * two_power(4 - 4 * k);
    for (int i = 0; i < 3 * k - 2; ++i) expected /= 3;
    add_constant(spec, f, expected);
  }
  for (int k = 2; k <= 4; ++k) {
    for (Ring ring : {Ring::Pure, Ring::Mixed}) {
      if (ring == Ring::Mixed && k < 3) continue;
      const FactoredRationalFunction f =
          ring == Ring::Pure ? closedforms::pure_n2_closed(k) : closedforms::mixed_n2_closed(k);
      const Rational ratio = verify::asymptotic_ratio_test(f, 5000);
      const double r = ratio.get_d();
      json inputs = spec_json({2, k, ring});
      inputs["m"] = 5000;
      inputs["tolerance"] = tolerance;
      report.add("asymptotic-ratio", inputs, std::abs(r - 1) <= tolerance, {{"ratio", r}});
    }
  }
  return report;
}

}  // namespace

verify::Report run_verify(const VerifyOptions& options) {
  verify::Report report;
  const bool all = options.scope == Scope::All;
  if (all || options.scope == Scope::N2) report.append(n2_suite(options.cache));
  if (all || options.scope == Scope::N3) report.append(n3_suite(options.cache));
  if (all || options.scope == Scope::Conjecture) report.append(conjecture_suite());
  if (all || options.scope == Scope::Asymptotics) report.append(asymptotics_suite(options.tolerance));
  return report;
}

void print(std::ostream& out, const verify::Report& report) {
  for (const auto& r : report.results()) {
    out << std::left << std::setw(5) << verify::to_string(r.status) << " " << r.name << " " << r.inputs.dump() << "\n";
  }
  out << report.results().size() << " checks, " << report.failures() << " failures\n";
}

// ---------------------------------------------------------------------------
// scan

IntRange parse_range(const std::string& text) {
  try {
    std::size_t pos = 0;
    IntRange r;
    r.first = std::stoi(text, &pos);
    if (pos == text.size()) {
      r.last = r.first;
    } else if (text.compare(pos, 2, "..") == 0) {
      std::size_t end = 0;
      r.last = std::stoi(text.substr(pos + 2), &end);
      if (pos + 2 + end != text.size()) throw UsageError("");
    } else {
      throw UsageError("");
    }
    if (r.last < r.first) throw UsageError("");
    return r;
  } catch (const std::exception&) {
    throw UsageError("invalid range '" + text + "', expected a or a..b");
  }
}

std::vector<CyclotomicExponents> smaller_candidates(const CyclotomicExponents& c) {
  std::vector<CyclotomicExponents> out;
  for (const auto& [d, e] : c.exponents()) {
    if (e == 0) continue;
    CyclotomicExponents smaller = c;
    smaller.set(d, e - 1);
    out.push_back(std::move(smaller));
  }
  return out;
}

std::vector<ProbeResult> probe_smaller(const TruncatedSeries& series, const CyclotomicExponents& denominator,
                                       const ProblemSpec& spec) {
  std::vector<ProbeResult> out;
  for (auto& candidate : smaller_candidates(denominator)) {
    molien::Reconstruction r = molien::try_reconstruct(series, candidate, spec);
    out.push_back({std::move(candidate), !r.ok, r.first_offending_degree});
  }
  return out;
}

namespace {

std::string product_string(const std::optional<FactoredDenominator>& d) { return d ? to_string(*d) : "none"; }

ScanRow scan_cell(const ProblemSpec& spec, const ScanOptions& options) {
  ScanRow row;
  row.spec = spec;
  const denomconj::ConjecturedDenominator c = denomconj::conjectured_denominator(spec.n, spec.k, spec.ring);
  row.conjectured = product_string(c.product);
  row.cyclotomic = to_string(c.cyclotomic);
  row.lcm_reading = to_string(c.lcm_reading);
  row.lcm_agrees = c.lcm_reading == c.cyclotomic;

  std::optional<FactoredDenominator> known = fixtures::proven_denominator(spec);
  if (known) {
    row.fixture = "proven";
  } else {
    for (const auto& f : fixtures::tabulated_denominators()) {
      if (f.spec == spec) {
        known = f.denominator;
        row.fixture = "table";
      }
    }
  }
  row.fixture_match = known ? (denomconj::compare_denominators(c.cyclotomic, known->cyclotomic()).equal ? "yes" : "no")
                            : "";

  row.invariants = "";
  if (spec.n > options.max_molien_n) {
    row.reconstruction = "unverified";
    return row;
  }
  const int order = options.order.value_or(c.cyclotomic.degree() + 10);
  molien::MolienOptions mopts;
  mopts.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(options.timeout));
  TruncatedSeries series;
  try {
    series = molien::cached_molien_series(spec, order, options.cache, mopts);
  } catch (const molien::TimeBudgetExceeded&) {
    row.reconstruction = "timeout";
    return row;
  }
  if (order < c.cyclotomic.degree() + molien::ReconstructOptions{}.guard_margin) {
    row.reconstruction = "unverified";
    row.note = "order too small";
    return row;
  }
  std::vector<std::string> warnings;
  molien::Reconstruction r = reconstruct_lenient(series, c.cyclotomic, spec, warnings);
  if (!warnings.empty()) row.note = warnings.front();
  if (!r.ok) {
    row.reconstruction = "failed";
    row.note = "first offending degree " + std::to_string(r.first_offending_degree);
  } else {
    row.reconstruction = "verified";
    row.numerator_degree = std::to_string(r.numerator.degree());
    if (c.product) {
      verify::Report inv = verify::check_invariants({r.numerator, *c.product}, spec, std::min(order, 60));
      row.invariants = inv.passed() ? "pass" : "fail";
      if (!inv.passed()) {
        for (const auto& check : inv.results()) {
          if (check.status == verify::Status::Fail) {
            row.note += (row.note.empty() ? "" : "; ") + check.name + " failed";
          }
        }
      }
    }
  }
  if (options.probe_smaller) {
    auto probes = probe_smaller(series, c.cyclotomic, spec);
    const auto rejected = std::count_if(probes.begin(), probes.end(), [](const ProbeResult& p) { return p.rejected; });
    row.smaller_probes = std::to_string(rejected) + "/" + std::to_string(probes.size()) + " rejected";
  }
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::vector<ScanRow> run_scan(const ScanOptions& options) {
  std::vector<ProblemSpec> cells;
  for (Ring ring : options.rings) {
    for (int n = options.n.first; n <= options.n.last; ++n) {
      for (int k = options.k.first; k <= options.k.last; ++k) {
        ProblemSpec spec{n, k, ring};
        if (n < 2 || k < 2) throw UsageError("scan needs n >= 2 and k >= 2");
        cells.push_back(spec);
      }
    }
  }
  const unsigned jobs = std::max(1u, options.jobs ? options.jobs : std::thread::hardware_concurrency());
  std::vector<ScanRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) rows[i] = scan_cell(cells[i], options);
  };
  std::vector<std::future<void>> pool;
  for (unsigned j = 0; j < std::min<std::size_t>(jobs, cells.size()); ++j) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "n,k,ring,conjectured,cyclotomic,lcm_reading,lcm_agrees,fixture,fixture_match,reconstruction,invariants,"
         "numerator_degree,smaller_probes,note\n";
  for (const auto& r : rows) {
    const std::vector<std::string> fields = {std::to_string(r.spec.n),
                                             std::to_string(r.spec.k),
                                             molien::to_string(r.spec.ring),
                                             r.conjectured,
                                             r.cyclotomic,
                                             r.lcm_reading,
                                             r.lcm_agrees ? "yes" : "no",
                                             r.fixture,
                                             r.fixture_match,
                                             r.reconstruction,
                                             r.invariants,
                                             r.numerator_degree,
                                             r.smaller_probes,
                                             r.note};
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << "\n";
  }
}

}  // namespace tracepoincare::cli
