#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracepoincare/rational.hpp"

namespace tracepoincare {

/// Raised by exact_div when the divisor leaves a nonzero remainder.
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial in t over the rationals, lowest degree first.
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// 1 - t^i
  static Polynomial one_minus_power(int i);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^i; zero outside the stored range.
  const Rational& operator[](int i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& t) const;
  /// t^deg * p(1/t)
  Polynomial reversed() const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Quotient of a by b; throws NotDivisible unless the remainder is zero.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned e);

bool is_palindromic(const Polynomial& p);
/// Largest m with factor^m | p. p must be nonzero and factor nonconstant.
int divisibility_multiplicity(const Polynomial& p, const Polynomial& factor);

/// Monic d-th cyclotomic polynomial phi_d.
Polynomial cyclotomic(int d);

/// Human-readable form such as "1 - 2t + 4t^2".
std::string to_string(const Polynomial& p, char var = 't');

}  // namespace tracepoincare
