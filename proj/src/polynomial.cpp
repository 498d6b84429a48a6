#include "tracepoincare/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace tracepoincare {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_power(int i) {
  if (i < 1) throw std::invalid_argument("1 - t^i needs i >= 1");
  std::vector<Rational> v(static_cast<std::size_t>(i) + 1);
  v.front() = 1;
  v.back() = -1;
  return Polynomial(std::move(v));
}

const Rational& Polynomial::operator[](int i) const {
  static const Rational zero;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::reversed() const {
  std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational lead = b[db];
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational q = top / lead;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b[j];
    quot[static_cast<std::size_t>(i - db)] = q;
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw NotDivisible("(" + to_string(a) + ") is not divisible by (" + to_string(b) + ")");
  }
  return q;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool is_palindromic(const Polynomial& p) { return p.reversed() == p; }

int divisibility_multiplicity(const Polynomial& p, const Polynomial& factor) {
  if (p.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
  if (factor.degree() < 1) throw std::invalid_argument("multiplicity of a constant factor");
  int m = 0;
  Polynomial cur = p;
  for (;;) {
    auto [q, r] = divmod(cur, factor);
    if (!r.is_zero()) return m;
    cur = std::move(q);
    ++m;
  }
}

Polynomial cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  Polynomial p = Polynomial::monomial(1, d) - Polynomial::constant(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = exact_div(p, cyclotomic(e));
  }
  return p;
}

std::string to_string(const Polynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace tracepoincare
