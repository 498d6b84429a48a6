#include "tracepoincare/denominator.hpp"

#include <sstream>

namespace tracepoincare {

namespace {

std::map<int, int> checked(std::map<int, int> exps) {
  for (auto it = exps.begin(); it != exps.end();) {
    if (it->first < 1) throw std::invalid_argument("factor index must be >= 1");
    if (it->second < 0) throw std::invalid_argument("negative exponent in denominator");
    it = it->second == 0 ? exps.erase(it) : std::next(it);
  }
  return exps;
}

int lookup(const std::map<int, int>& m, int key) {
  auto it = m.find(key);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

FactoredDenominator::FactoredDenominator(std::initializer_list<std::pair<const int, int>> exps)
    : exps_(checked(std::map<int, int>(exps))) {}

FactoredDenominator::FactoredDenominator(std::map<int, int> exps) : exps_(checked(std::move(exps))) {}

int FactoredDenominator::exponent(int i) const { return lookup(exps_, i); }

int FactoredDenominator::max_index() const { return exps_.empty() ? 0 : exps_.rbegin()->first; }

int FactoredDenominator::degree() const {
  int deg = 0;
  for (auto [i, e] : exps_) deg += i * e;
  return deg;
}

int FactoredDenominator::factor_count() const {
  int n = 0;
  for (auto [i, e] : exps_) n += e;
  return n;
}

Polynomial FactoredDenominator::expand() const {
  Polynomial p = Polynomial::constant(1);
  for (auto [i, e] : exps_) p *= pow(Polynomial::one_minus_power(i), static_cast<unsigned>(e));
  return p;
}

CyclotomicExponents FactoredDenominator::cyclotomic() const {
  std::map<int, int> out;
  for (auto [i, e] : exps_) {
    for (int d = 1; d <= i; ++d) {
      if (i % d == 0) out[d] += e;
    }
  }
  return CyclotomicExponents(std::move(out));
}

FactoredDenominator& FactoredDenominator::operator*=(const FactoredDenominator& rhs) {
  for (auto [i, e] : rhs.exps_) exps_[i] += e;
  return *this;
}

CyclotomicExponents::CyclotomicExponents(std::initializer_list<std::pair<const int, int>> exps)
    : exps_(checked(std::map<int, int>(exps))) {}

CyclotomicExponents::CyclotomicExponents(std::map<int, int> exps) : exps_(checked(std::move(exps))) {}

int CyclotomicExponents::exponent(int d) const { return lookup(exps_, d); }

int CyclotomicExponents::max_index() const { return exps_.empty() ? 0 : exps_.rbegin()->first; }

int CyclotomicExponents::degree() const {
  int deg = 0;
  for (auto [d, e] : exps_) deg += euler_phi(d) * e;
  return deg;
}

Polynomial CyclotomicExponents::expand() const {
  Polynomial p = Polynomial::constant(1);
  for (auto [d, e] : exps_) {
    Polynomial factor = d == 1 ? Polynomial::one_minus_power(1) : cyclotomic(d);
    p *= pow(factor, static_cast<unsigned>(e));
  }
  return p;
}

std::optional<FactoredDenominator> CyclotomicExponents::try_product_form() const {
  // e_d = sum over multiples i of d of x_i, solved from the largest d down.
  std::map<int, int> remaining = exps_;
  std::map<int, int> product;
  for (int i = max_index(); i >= 1; --i) {
    int x = lookup(remaining, i);
    if (x < 0) return std::nullopt;
    if (x == 0) continue;
    product[i] = x;
    for (int d = 1; d <= i; ++d) {
      if (i % d == 0) remaining[d] -= x;
    }
  }
  return FactoredDenominator(std::move(product));
}

FactoredDenominator CyclotomicExponents::to_product_form() const {
  auto p = try_product_form();
  if (!p) throw NoProductForm("no (1 - t^i) product realizes " + to_string(*this));
  return *p;
}

void CyclotomicExponents::set(int d, int e) {
  if (d < 1 || e < 0) throw std::invalid_argument("bad cyclotomic exponent");
  if (e == 0) {
    exps_.erase(d);
  } else {
    exps_[d] = e;
  }
}

int euler_phi(int d) {
  int result = d;
  int m = d;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long cyclotomic_value_at_one(int d) {
  if (d < 2) throw std::invalid_argument("phi_1(1) = 0; defined here only for d >= 2");
  int m = d;
  int p = 2;
  while (m % p != 0) ++p;
  while (m % p == 0) m /= p;
  return m == 1 ? p : 1;
}

std::string to_string(const FactoredDenominator& d) {
  if (d.exponents().empty()) return "1";
  std::ostringstream os;
  for (auto [i, e] : d.exponents()) {
    os << "(1-t";
    if (i > 1) os << '^' << i;
    os << ')';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::string to_string(const CyclotomicExponents& c) {
  if (c.exponents().empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto [d, e] : c.exponents()) {
    if (!first) os << ' ';
    first = false;
    os << "phi" << d << '^' << e;
  }
  return os.str();
}

}  // namespace tracepoincare
