#pragma once

// Conjectured least denominators for the trace rings of n x n matrices,
// built from the exponent profiles of the rational functions
//   F(t) = prod_{i != j} (1 - t^{|i-j|}) / prod_{i != j-1} (1 - t^{|i-j+1|})^k
//   G(t) = (1 + t + ... + t^{n-1})^2 F(t)
// and compared in cyclotomic form against known denominators.

#include <optional>
#include <string>
#include <vector>

#include "tracepoincare/denominator.hpp"
#include "tracepoincare/molien.hpp"
#include "tracepoincare/rational_function.hpp"

namespace tracepoincare::denomconj {

enum class ProfileKind { Alpha, Beta };

std::string to_string(ProfileKind kind);

/// F (alpha, pure ring) or G (beta, mixed ring) written as prod (1 - t^i)^{-values(i)}.
struct ExponentProfile {
  ProfileKind kind = ProfileKind::Alpha;
  int n = 0;
  int k = 0;
  /// values(i) for 1 <= i <= n, zeros included.
  std::map<int, int> values;

  int operator()(int i) const;
  FactoredDenominator as_denominator() const;
};

/// alpha(i) = 2(k-1)(n-i) for i < n, alpha(n) = k;
/// beta(1) = alpha(1) + 2, beta(n) = k - 2, beta(i) = alpha(i) otherwise.
ExponentProfile profile(int n, int k, molien::Ring ring);

struct ProductCheck {
  int n = 0;
  int k = 0;
  ProfileKind kind = ProfileKind::Alpha;
  bool holds = false;
  /// The defining double product, uncancelled.
  FactoredRationalFunction literal;
  FactoredDenominator expected;
};

/// Expands the defining double product of F (or G) factor by factor and tests
/// equality with prod (1 - t^i)^{-profile(i)} as rational functions. 2 <= n <= 8.
ProductCheck verify_profile_product(int n, int k, molien::Ring ring);

struct ConjecturedDenominator {
  molien::ProblemSpec spec;
  /// e_d = sum_{d | i <= n} profile(i) + (n-1)(k-1), for every d <= n.
  CyclotomicExponents cyclotomic;
  /// Present when cyclotomic admits a nonnegative (1 - t^i) factorization.
  std::optional<FactoredDenominator> product;
  /// The alternative least-common-multiple statement,
  /// lcm{(1 - t^i)^{profile(i) + (n-1)(k-1)}}, kept for comparison.
  CyclotomicExponents lcm_reading;
};

ConjecturedDenominator conjectured_denominator(int n, int k, molien::Ring ring);

/// Least denominator of the order-th derivative of 1/den, by repeated
/// symbolic differentiation with cancellation after every step.
CyclotomicExponents derivative_denominator(const FactoredDenominator& den, int order);

struct ExponentDifference {
  int d = 0;
  int left = 0;
  int right = 0;
};

struct Comparison {
  bool equal = true;
  std::vector<ExponentDifference> differences;
};

Comparison compare_denominators(const CyclotomicExponents& a, const CyclotomicExponents& b);
Comparison compare_denominators(const FactoredDenominator& a, const FactoredDenominator& b);

std::string to_string(const Comparison& c);

}  // namespace tracepoincare::denomconj
