#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "tracepoincare/polynomial.hpp"

namespace tracepoincare {

class CyclotomicExponents;

/// Raised when a cyclotomic exponent vector has no nonnegative
/// factorization into (1 - t^i) factors.
class NoProductForm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Product of (1 - t^i)^{e_i}, i >= 1. Zero exponents are not stored.
class FactoredDenominator {
 public:
  FactoredDenominator() = default;
  FactoredDenominator(std::initializer_list<std::pair<const int, int>> exps);
  explicit FactoredDenominator(std::map<int, int> exps);

  int exponent(int i) const;
  const std::map<int, int>& exponents() const { return exps_; }
  /// Largest i carrying a nonzero exponent (0 for the empty product).
  int max_index() const;
  /// sum i * e_i
  int degree() const;
  /// sum e_i, the number of (1 - t^i) factors
  int factor_count() const;

  /// Expanded polynomial; constant term 1.
  Polynomial expand() const;
  CyclotomicExponents cyclotomic() const;

  FactoredDenominator& operator*=(const FactoredDenominator& rhs);
  friend FactoredDenominator operator*(FactoredDenominator a, const FactoredDenominator& b) { return a *= b; }
  friend bool operator==(const FactoredDenominator&, const FactoredDenominator&) = default;

 private:
  std::map<int, int> exps_;
};

/// Exponents e_d of the cyclotomic factors. Expansion uses psi_1 = 1 - t and
/// psi_d = phi_d for d >= 2, so that 1 - t^i equals prod_{d | i} psi_d with no
/// stray sign; this is the only place the (-1)^{#factors} of the monic
/// convention is absorbed.
class CyclotomicExponents {
 public:
  CyclotomicExponents() = default;
  CyclotomicExponents(std::initializer_list<std::pair<const int, int>> exps);
  explicit CyclotomicExponents(std::map<int, int> exps);

  int exponent(int d) const;
  const std::map<int, int>& exponents() const { return exps_; }
  int max_index() const;
  /// sum e_d * deg(phi_d)
  int degree() const;
  Polynomial expand() const;

  /// Reverse conversion, peeling (1 - t^i) factors from the largest i down.
  FactoredDenominator to_product_form() const;
  std::optional<FactoredDenominator> try_product_form() const;

  void set(int d, int e);
  friend bool operator==(const CyclotomicExponents&, const CyclotomicExponents&) = default;

 private:
  std::map<int, int> exps_;
};

/// Euler's totient, the degree of phi_d.
int euler_phi(int d);
/// phi_d(1) for d >= 2: p when d is a power of the prime p, else 1.
long cyclotomic_value_at_one(int d);

std::string to_string(const FactoredDenominator& d);
std::string to_string(const CyclotomicExponents& c);

}  // namespace tracepoincare
