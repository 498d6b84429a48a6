#pragma once

// Invariant checks for Poincare series of trace rings: the functional
// equation, the pole order at t = 1, lowest-terms certificates and the
// leading growth of the coefficients.

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracepoincare/molien.hpp"
#include "tracepoincare/rational_function.hpp"

namespace tracepoincare::verify {

class FunctionalEquationViolated : public std::runtime_error {
 public:
  FunctionalEquationViolated(const std::string& what, Polynomial residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const Polynomial& residual() const { return residual_; }

 private:
  Polynomial residual_;
};

/// Returns s in {+1, -1} with f(1/t) = s t^{k n^2} f(t).
int check_functional_equation(const FactoredRationalFunction& f, int n, int k);

class PoleOrderMismatch : public std::runtime_error {
 public:
  PoleOrderMismatch(int expected, int actual);
  int expected() const { return expected_; }
  int actual() const { return actual_; }

 private:
  int expected_;
  int actual_;
};

/// Order of the pole at t = 1 after cancelling numerator roots at 1.
int pole_order_at_one(const FactoredRationalFunction& f);
/// Returns the order, throwing PoleOrderMismatch unless it is (k-1) n^2 + 1.
int check_pole_order(const FactoredRationalFunction& f, int n, int k);

/// Numerator equals plus or minus its own reversal.
bool numerator_symmetric(const FactoredRationalFunction& f);

struct CyclotomicResidue {
  int d = 0;
  int denominator_exponent = 0;
  /// Numerator mod phi_d.
  Polynomial remainder;
  bool cancels() const { return remainder.is_zero(); }
};

struct LeastnessReport {
  bool least = true;
  /// One entry per phi_d in the denominator.
  std::vector<CyclotomicResidue> denominator_factors;
  /// phi_d (d <= max(12, largest denominator index)) dividing the numerator, with multiplicity.
  std::vector<std::pair<int, int>> numerator_factors;
};

LeastnessReport leastness_certificate(const FactoredRationalFunction& f);

class DominanceViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c_m ~ A C(m + d - 1, d - 1).
struct AsymptoticEstimate {
  int d = 0;
  Rational A;

  Rational estimate(long m) const;
  /// Constant of the monomial form A / (d-1)! m^{d-1}.
  Rational monomial_constant() const;
};

/// For partial_sums the estimate describes sum_{j <= m} c_j, i.e. f / (1 - t).
/// Throws DominanceViolated when another root of unity has pole order >= d.
AsymptoticEstimate asymptotics(const FactoredRationalFunction& f, bool partial_sums = false);

/// c_m / (A C(m + d - 1, d - 1)), c_m from the denominator recurrence.
Rational asymptotic_ratio_test(const FactoredRationalFunction& f, long m);

struct ConstantDenominatorCheck {
  /// Denominator of A / (d-1)! in lowest terms.
  Integer actual;
  /// [d-1]! prod_j j^{profile(j)} prod_{2 <= e <= n} phi_e(1)^{(k-1)(n-1)}.
  Integer bound;
  bool divides = false;
};

/// Compares the growth constant's denominator with the form predicted from
/// the conjectured denominator. Informational.
ConstantDenominatorCheck check_constant_denominator(const AsymptoticEstimate& estimate, const molien::ProblemSpec& spec,
                                                    bool partial_sums = false);

// ---------------------------------------------------------------------------
// Reports

enum class Status { Pass, Fail, Info };

std::string to_string(Status s);

struct CheckResult {
  std::string name;
  nlohmann::json inputs;
  Status status = Status::Pass;
  nlohmann::json witness;
};

class Report {
 public:
  void add(CheckResult r) { results_.push_back(std::move(r)); }
  void add(std::string name, nlohmann::json inputs, bool ok, nlohmann::json witness);
  void append(const Report& other);

  const std::vector<CheckResult>& results() const { return results_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  nlohmann::json to_json() const;

 private:
  std::vector<CheckResult> results_;
};

/// Functional equation, pole order, numerator symmetry and the coefficients
/// 0..order being nonnegative integers, for one series.
Report check_invariants(const FactoredRationalFunction& f, const molien::ProblemSpec& spec, int order = 60);

}  // namespace tracepoincare::verify
