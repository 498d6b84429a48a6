#include "tracepoincare/verify.hpp"

#include <algorithm>

#include "tracepoincare/denomconj.hpp"
#include "tracepoincare/serialization.hpp"

namespace tracepoincare::verify {

namespace {

Polynomial factor(int d) { return d == 1 ? Polynomial{1, -1} : cyclotomic(d); }

/// Multiplicity of (1 - t) in p, and p with those factors removed.
std::pair<int, Polynomial> split_root_at_one(const Polynomial& p) {
  int r = 0;
  Polynomial rest = p;
  while (!rest.is_zero() && rest.evaluate(1) == 0) {
    rest = exact_div(rest, factor(1));
    ++r;
  }
  return {r, rest};
}

}  // namespace

int check_functional_equation(const FactoredRationalFunction& f, int n, int k) {
  const Polynomial& num = f.numerator;
  if (num.is_zero()) throw FunctionalEquationViolated("numerator is zero", Polynomial());
  const int m = f.denominator.degree() - k * n * n;
  const int shift = std::max(0, num.degree() - m);
  // t^{m + shift} N(1/t) against t^shift N(t); both sides are polynomials.
  Polynomial lhs = Polynomial::monomial(1, m + shift - num.degree()) * num.reversed();
  Polynomial rhs = Polynomial::monomial(1, shift) * num;
  const int parity = f.denominator.factor_count() % 2 == 0 ? 1 : -1;
  if (lhs == rhs) return parity;
  if (lhs == -rhs) return -parity;
  throw FunctionalEquationViolated("t^m N(1/t) != +-N(t) with m = deg(den) - k n^2 = " + std::to_string(m),
                                   lhs - rhs);
}

PoleOrderMismatch::PoleOrderMismatch(int expected, int actual)
    : std::runtime_error("pole order at t = 1 is " + std::to_string(actual) + ", expected " + std::to_string(expected)),
      expected_(expected),
      actual_(actual) {}

int pole_order_at_one(const FactoredRationalFunction& f) {
  return f.denominator.cyclotomic().exponent(1) - split_root_at_one(f.numerator).first;
}

int check_pole_order(const FactoredRationalFunction& f, int n, int k) {
  const int actual = pole_order_at_one(f);
  const int expected = (k - 1) * n * n + 1;
  if (actual != expected) throw PoleOrderMismatch(expected, actual);
  return actual;
}

bool numerator_symmetric(const FactoredRationalFunction& f) {
  const Polynomial r = f.numerator.reversed();
  return r == f.numerator || r == -f.numerator;
}

LeastnessReport leastness_certificate(const FactoredRationalFunction& f) {
  LeastnessReport out;
  const CyclotomicExponents cyc = f.denominator.cyclotomic();
  for (const auto& [d, e] : cyc.exponents()) {
    CyclotomicResidue r{d, e, divmod(f.numerator, factor(d)).remainder};
    if (r.cancels()) out.least = false;
    out.denominator_factors.push_back(std::move(r));
  }
  const int top = std::max(12, cyc.max_index());
  for (int d = 1; d <= top && !f.numerator.is_zero(); ++d) {
    if (euler_phi(d) > f.numerator.degree()) continue;
    const int mult = divisibility_multiplicity(f.numerator, factor(d));
    if (mult > 0) out.numerator_factors.emplace_back(d, mult);
  }
  return out;
}

Rational AsymptoticEstimate::estimate(long m) const { return A * Rational(binomial(m + d - 1, d - 1)); }

Rational AsymptoticEstimate::monomial_constant() const {
  return A / Rational(factorial(static_cast<unsigned long>(d - 1)));
}

AsymptoticEstimate asymptotics(const FactoredRationalFunction& f, bool partial_sums) {
  const auto [r, reduced] = split_root_at_one(f.numerator);
  if (reduced.is_zero()) throw std::invalid_argument("numerator is zero");
  const CyclotomicExponents cyc = f.denominator.cyclotomic();
  AsymptoticEstimate out;
  out.d = cyc.exponent(1) - r + (partial_sums ? 1 : 0);
  if (out.d < 1) throw DominanceViolated("no pole at t = 1");
  Rational g_at_one = 1;
  for (const auto& [d, e] : cyc.exponents()) {
    if (d == 1) continue;
    const int order = e - divisibility_multiplicity(reduced, factor(d));
    if (order >= out.d) {
      throw DominanceViolated("pole at primitive " + std::to_string(d) + "-th roots of unity has order " +
                              std::to_string(order) + " >= " + std::to_string(out.d));
    }
    for (int j = 0; j < e; ++j) g_at_one *= Rational(cyclotomic_value_at_one(d));
  }
  out.A = reduced.evaluate(1) / g_at_one;
  return out;
}

Rational asymptotic_ratio_test(const FactoredRationalFunction& f, long m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const AsymptoticEstimate e = asymptotics(f);
  return coefficient_at(f, m) / e.estimate(m);
}

ConstantDenominatorCheck check_constant_denominator(const AsymptoticEstimate& estimate, const molien::ProblemSpec& spec,
                                                    bool partial_sums) {
  const denomconj::ExponentProfile p = denomconj::profile(spec.n, spec.k, spec.ring);
  ConstantDenominatorCheck out;
  out.actual = estimate.monomial_constant().get_den();
  const int top = spec.n * spec.n * (spec.k - 1) + (partial_sums ? 1 : 0);
  out.bound = factorial(static_cast<unsigned long>(top));
  for (int j = 1; j <= spec.n; ++j) {
    Integer jj = j;
    for (int e = 0; e < p(j); ++e) out.bound *= jj;
  }
  for (int d = 2; d <= spec.n; ++d) {
    Integer v = cyclotomic_value_at_one(d);
    for (int e = 0; e < (spec.k - 1) * (spec.n - 1); ++e) out.bound *= v;
  }
  out.divides = mpz_divisible_p(out.bound.get_mpz_t(), out.actual.get_mpz_t()) != 0;
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "unknown";
}

void Report::add(std::string name, nlohmann::json inputs, bool ok, nlohmann::json witness) {
  add(CheckResult{std::move(name), std::move(inputs), ok ? Status::Pass : Status::Fail, std::move(witness)});
}

void Report::append(const Report& other) {
  results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results_.begin(), results_.end(), [](const CheckResult& r) { return r.status == Status::Fail; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results_) {
    checks.push_back({{"name", r.name}, {"inputs", r.inputs}, {"status", to_string(r.status)}, {"witness", r.witness}});
  }
  return {{"checks", checks},
          {"total", results_.size()},
          {"failures", failures()},
          {"status", passed() ? "pass" : "fail"}};
}

Report check_invariants(const FactoredRationalFunction& f, const molien::ProblemSpec& spec, int order) {
  Report report;
  const nlohmann::json inputs = {{"n", spec.n}, {"k", spec.k}, {"ring", molien::to_string(spec.ring)}};

  try {
    const int sign = check_functional_equation(f, spec.n, spec.k);
    report.add("functional-equation", inputs, true, {{"sign", sign}});
  } catch (const FunctionalEquationViolated& e) {
    report.add("functional-equation", inputs, false, {{"error", e.what()}, {"residual", to_json(e.residual())}});
  }

  try {
    report.add("pole-order", inputs, true, {{"order", check_pole_order(f, spec.n, spec.k)}});
  } catch (const PoleOrderMismatch& e) {
    report.add("pole-order", inputs, false, {{"expected", e.expected()}, {"actual", e.actual()}});
  }

  report.add("numerator-symmetric", inputs, numerator_symmetric(f), {{"numerator", to_json(f.numerator)}});

  const TruncatedSeries s = series_of(f, order);
  int bad = -1;
  for (int d = 0; d <= order && bad < 0; ++d) {
    if (!is_integer(s[d]) || s[d] < 0) bad = d;
  }
  nlohmann::json witness = {{"order", order}};
  if (bad >= 0) {
    witness["degree"] = bad;
    witness["coefficient"] = to_fraction_string(s[bad]);
  }
  report.add("nonnegative-integer-coefficients", inputs, bad < 0, witness);
  return report;
}

}  // namespace tracepoincare::verify
