// Acceptance gate: one line per criterion, nonzero exit status if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "tracepoincare/closedforms.hpp"
#include "tracepoincare/denomconj.hpp"
#include "tracepoincare/fixtures.hpp"
#include "tracepoincare/molien.hpp"
#include "tracepoincare/verify.hpp"

using namespace tracepoincare;
using molien::ProblemSpec;
using molien::Ring;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Reconstructs the engine series over the proven denominator; ok iff it
/// equals the tabulated numerator and the slowest cell fits the budget.
Outcome numerator_table(Ring ring, int n, int k_first, int k_last, int min_order, double budget, int max_order = 1 << 30) {
  Outcome out;
  double slowest = 0;
  std::string failures;
  const std::string family = *fixtures::numerator_family({n, k_first, ring});
  for (int k = k_first; k <= k_last; ++k) {
    const ProblemSpec spec{n, k, ring};
    const FactoredDenominator den = *fixtures::proven_denominator(spec);
    const int order = std::max(min_order, den.degree() + 10);
    const auto start = Clock::now();
    bool ok = order <= max_order;
    try {
      FactoredRationalFunction f = molien::reconstruct(molien::molien_series(spec, order), den, spec);
      ok = ok && f.numerator == *fixtures::numerator(family, k);
    } catch (const molien::ReconstructionFailed&) {
      ok = false;
    }
    const double s = seconds_since(start);
    slowest = std::max(slowest, s);
    if (!ok || s > budget) failures += " k=" + std::to_string(k);
  }
  out.ok = failures.empty();
  char buf[160];
  std::snprintf(buf, sizeof buf, "slowest k %.2f s (budget %.0f s)", slowest, budget);
  out.detail = buf + (failures.empty() ? std::string() : ", failed at" + failures);
  return out;
}

Outcome criterion1() { return numerator_table(Ring::Pure, 2, 2, 8, 60, 10); }
Outcome criterion2() { return numerator_table(Ring::Mixed, 2, 3, 10, 60, 10); }
Outcome criterion3() { return numerator_table(Ring::Pure, 3, 2, 4, 0, 600, 90); }

Outcome criterion4() {
  int matched = 0;
  int total = 0;
  std::string failures;
  for (const char* name : {"pure_n2", "mixed_n2", "pure_n3", "mixed_n3"}) {
    bool family_ok = true;
    for (int k = 2; k <= 10; ++k) {
      for (const auto& f : fixtures::proven_denominators(k)) {
        if (f.name != name) continue;
        const auto c = denomconj::conjectured_denominator(f.spec.n, k, f.spec.ring);
        family_ok = family_ok && denomconj::compare_denominators(c.cyclotomic, f.denominator.cyclotomic()).equal;
      }
    }
    ++total;
    if (family_ok) {
      ++matched;
    } else {
      failures += std::string(" ") + name;
    }
  }
  for (const auto& f : fixtures::tabulated_denominators()) {
    const auto c = denomconj::conjectured_denominator(f.spec.n, f.spec.k, f.spec.ring);
    ++total;
    if (denomconj::compare_denominators(c.cyclotomic, f.denominator.cyclotomic()).equal) {
      ++matched;
    } else {
      failures += " " + f.name;
    }
  }
  return {matched == 10 && total == 10,
          std::to_string(matched) + "/" + std::to_string(total) + " fixtures matched" +
              (failures.empty() ? "" : ", mismatched:" + failures)};
}

Outcome criterion5() {
  using closedforms::Identity;
  int identities = 0;
  std::string failures;
  for (int k = 2; k <= 20; ++k) {
    for (Identity id : {Identity::SquaredBinomialSum, Identity::BracketSimplification, Identity::AdjacentBinomialSum}) {
      ++identities;
      if (!closedforms::verify_identity(id, k, 200).holds()) failures += " " + closedforms::to_string(id) + "@k=" + std::to_string(k);
    }
  }
  for (int k = 4; k <= 8; ++k) {
    if (!closedforms::check_b_recurrence(k).holds) failures += " b-recurrence@k=" + std::to_string(k);
  }
  int recurrences = 0;
  for (const auto& c : closedforms::check_operator_recurrences(6, 100)) {
    if (c.name.rfind("squared", 0) != 0 && c.name.rfind("narayana", 0) != 0) continue;
    ++recurrences;
    if (!c.holds) failures += " " + c.name + "@k=" + std::to_string(c.k);
  }
  return {failures.empty(), std::to_string(identities) + " identity checks to degree 200, 5 B-recurrence checks, " +
                                std::to_string(recurrences) + " operator-recurrence checks to order 100" +
                                (failures.empty() ? "" : ", failed:" + failures)};
}

Outcome criterion6() {
  std::vector<std::pair<ProblemSpec, FactoredRationalFunction>> series;
  for (int k = 2; k <= 8; ++k) {
    const ProblemSpec spec{2, k, Ring::Pure};
    series.emplace_back(spec, closedforms::pure_n2_closed(k));
    series.emplace_back(spec, molien::reconstruct(molien::molien_series(spec, 60), *fixtures::proven_denominator(spec), spec));
  }
  for (int k = 3; k <= 10; ++k) {
    const ProblemSpec spec{2, k, Ring::Mixed};
    series.emplace_back(spec, closedforms::mixed_n2_closed(k));
    series.emplace_back(spec, molien::reconstruct(molien::molien_series(spec, 64), *fixtures::proven_denominator(spec), spec));
  }
  for (int k = 2; k <= 4; ++k) {
    for (Ring ring : {Ring::Pure, Ring::Mixed}) {
      const ProblemSpec spec{3, k, ring};
      const FactoredDenominator den = *fixtures::proven_denominator(spec);
      series.emplace_back(spec, molien::reconstruct(molien::molien_series(spec, den.degree() + 10), den, spec));
    }
  }
  std::string failures;
  int plus = 0;
  int minus = 0;
  for (const auto& [spec, f] : series) {
    verify::Report r = verify::check_invariants(f, spec, 60);
    if (!r.passed()) {
      failures += " (" + std::to_string(spec.n) + "," + std::to_string(spec.k) + "," + molien::to_string(spec.ring) + ")";
      continue;
    }
    (verify::check_functional_equation(f, spec.n, spec.k) == 1 ? plus : minus) += 1;
  }
  int catalan_checks = 0;
  for (int k = 2; k <= 12; ++k) {
    const Rational c(catalan(static_cast<unsigned long>(k - 2)));
    ++catalan_checks;
    if (closedforms::pure_n2_closed(k).numerator.evaluate(1) != c) failures += " catalan-pure@k=" + std::to_string(k);
    if (k >= 3) {
      ++catalan_checks;
      if (closedforms::mixed_n2_closed(k).numerator.evaluate(1) != c) failures += " catalan-mixed@k=" + std::to_string(k);
    }
  }
  return {failures.empty(), std::to_string(series.size()) + " series (signs: " + std::to_string(plus) + " plus, " +
                                std::to_string(minus) + " minus), " + std::to_string(catalan_checks) + " Catalan checks" +
                                (failures.empty() ? "" : ", failed:" + failures)};
}

Rational power(long base, int e) {
  Rational out = 1;
  for (int i = 0; i < std::abs(e); ++i) out *= base;
  return e >= 0 ? out : Rational(1) / out;
}

Outcome criterion7() {
  std::string failures;
  int constants = 0;
  for (int k = 2; k <= 8; ++k) {
    const Rational c(catalan(static_cast<unsigned long>(k - 2)));
    ++constants;
    if (verify::asymptotics(closedforms::pure_n2_closed(k)).A != c * power(2, 1 - 2 * k)) failures += " pure@k=" + std::to_string(k);
    if (k >= 3) {
      ++constants;
      if (verify::asymptotics(closedforms::mixed_n2_closed(k)).A != c * power(2, 3 - 2 * k)) {
        failures += " mixed@k=" + std::to_string(k);
      }
    }
  }
  for (int k = 2; k <= 4; ++k) {
    ++constants;
    const ProblemSpec spec{3, k, Ring::Pure};
    const FactoredDenominator den = *fixtures::proven_denominator(spec);
    const FactoredRationalFunction f = molien::reconstruct(molien::molien_series(spec, den.degree() + 10), den, spec);
    const Rational expected = Rational(*fixtures::pure_n3_value_at_one(k)) * power(2, 4 - 4 * k) * power(3, 2 - 3 * k);
    if (verify::asymptotics(f).A != expected) failures += " n3@k=" + std::to_string(k);
  }
  double worst_gap = 0;
  double slowest = 0;
  for (int k = 2; k <= 4; ++k) {
    for (Ring ring : {Ring::Pure, Ring::Mixed}) {
      if (ring == Ring::Mixed && k < 3) continue;
      const auto start = Clock::now();
      const FactoredRationalFunction f = ring == Ring::Pure ? closedforms::pure_n2_closed(k) : closedforms::mixed_n2_closed(k);
      const double ratio = verify::asymptotic_ratio_test(f, 5000).get_d();
      const double s = seconds_since(start);
      slowest = std::max(slowest, s);
      worst_gap = std::max(worst_gap, std::abs(ratio - 1));
      if (ratio < 0.99 || ratio > 1.01 || s > 5) failures += " ratio-" + molien::to_string(ring) + "@k=" + std::to_string(k);
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "%d exact constants, ratio at m=5000 within %.4f of 1, slowest ratio %.2f s", constants,
                worst_gap, slowest);
  return {failures.empty(), buf + (failures.empty() ? std::string() : ", failed:" + failures)};
}

Outcome criterion8() {
  std::string failures;
  int probes = 0;
  for (auto [n, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const ProblemSpec spec{n, k, Ring::Pure};
    const CyclotomicExponents den = fixtures::proven_denominator(spec)->cyclotomic();
    const TruncatedSeries series = molien::molien_series(spec, den.degree() + 10);
    if (!molien::try_reconstruct(series, den, spec).ok) failures += " proven-denominator-rejected";
    for (const auto& [d, e] : den.exponents()) {
      CyclotomicExponents smaller = den;
      smaller.set(d, e - 1);
      ++probes;
      if (molien::try_reconstruct(series, smaller, spec).ok) {
        failures += " (" + std::to_string(n) + "," + std::to_string(k) + ") phi" + std::to_string(d);
      }
    }
  }
  return {failures.empty(), std::to_string(probes) + " smaller candidates, all rejected" +
                                (failures.empty() ? "" : std::string(", accepted:") + failures)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"n=2 pure numerators k=2..8 from the series engine at D=60", criterion1},
      {"n=2 mixed numerators k=3..10 from the series engine", criterion2},
      {"n=3 pure numerators k=2..4 from the series engine at D<=90", criterion3},
      {"conjectured denominators match the ten known cases", criterion4},
      {"identities, B recurrence and operator recurrences", criterion5},
      {"functional equation, pole order, symmetry, integrality, Catalan values", criterion6},
      {"asymptotic constants and ratio test", criterion7},
      {"leastness probes for (2,2), (2,3), (3,2)", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %zu  %s: %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
