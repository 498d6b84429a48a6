#include "tracepoincare/denomconj.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tracepoincare::denomconj {

namespace {

void require(int n, int k) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
}

/// phi_d with phi_1 taken as 1 - t, matching the (1 - t^i) products.
Polynomial factor(int d) { return d == 1 ? Polynomial{1, -1} : cyclotomic(d); }

}  // namespace

std::string to_string(ProfileKind kind) { return kind == ProfileKind::Alpha ? "alpha" : "beta"; }

int ExponentProfile::operator()(int i) const {
  auto it = values.find(i);
  return it == values.end() ? 0 : it->second;
}

FactoredDenominator ExponentProfile::as_denominator() const { return FactoredDenominator(values); }

ExponentProfile profile(int n, int k, molien::Ring ring) {
  require(n, k);
  ExponentProfile p;
  p.kind = ring == molien::Ring::Pure ? ProfileKind::Alpha : ProfileKind::Beta;
  p.n = n;
  p.k = k;
  for (int i = 1; i < n; ++i) p.values[i] = 2 * (k - 1) * (n - i);
  p.values[n] = k;
  if (p.kind == ProfileKind::Beta) {
    p.values[1] += 2;
    p.values[n] -= 2;
  }
  return p;
}

ProductCheck verify_profile_product(int n, int k, molien::Ring ring) {
  require(n, k);
  if (n > 8) throw std::invalid_argument("n must be <= 8");
  Polynomial numerator = Polynomial::constant(1);
  std::map<int, int> den;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) numerator *= Polynomial::one_minus_power(std::abs(i - j));
      if (i != j - 1) den[std::abs(i - j + 1)] += k;
    }
  }
  if (ring == molien::Ring::Mixed) {
    Polynomial sum;
    for (int i = 0; i < n; ++i) sum += Polynomial::monomial(1, i);
    numerator *= sum * sum;
  }
  ExponentProfile p = profile(n, k, ring);
  ProductCheck out{n, k, p.kind, false, {numerator, FactoredDenominator(den)}, p.as_denominator()};
  out.holds = same_function(out.literal, FactoredRationalFunction{Polynomial::constant(1), out.expected});
  return out;
}

ConjecturedDenominator conjectured_denominator(int n, int k, molien::Ring ring) {
  const ExponentProfile p = profile(n, k, ring);
  const int shift = (n - 1) * (k - 1);
  ConjecturedDenominator out;
  out.spec = {n, k, ring};
  for (int d = 1; d <= n; ++d) {
    int sum = 0;
    int lcm = 0;
    for (int i = d; i <= n; i += d) {
      sum += p(i);
      lcm = std::max(lcm, p(i) + shift);
    }
    out.cyclotomic.set(d, sum + shift);
    out.lcm_reading.set(d, lcm);
  }
  out.product = out.cyclotomic.try_product_form();
  return out;
}

CyclotomicExponents derivative_denominator(const FactoredDenominator& den, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  std::map<int, int> exps = den.cyclotomic().exponents();
  Polynomial numerator = Polynomial::constant(1);
  for (int step = 0; step < order; ++step) {
    // (N / prod phi_d^{e_d})' = [N' S - N sum_d e_d phi_d' S / phi_d] / prod phi_d^{e_d + 1}, S = prod phi_d
    Polynomial s = Polynomial::constant(1);
    for (const auto& [d, e] : exps) s *= factor(d);
    Polynomial next = numerator.derivative() * s;
    for (const auto& [d, e] : exps) {
      next -= numerator * factor(d).derivative() * exact_div(s, factor(d)) * Rational(e);
    }
    numerator = std::move(next);
    for (auto& [d, e] : exps) {
      ++e;
      while (e > 0) {
        DivMod qr = divmod(numerator, factor(d));
        if (!qr.remainder.is_zero()) break;
        numerator = std::move(qr.quotient);
        --e;
      }
    }
    std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
  }
  return CyclotomicExponents(exps);
}

Comparison compare_denominators(const CyclotomicExponents& a, const CyclotomicExponents& b) {
  Comparison out;
  const int top = std::max(a.max_index(), b.max_index());
  for (int d = 1; d <= top; ++d) {
    if (a.exponent(d) != b.exponent(d)) {
      out.equal = false;
      out.differences.push_back({d, a.exponent(d), b.exponent(d)});
    }
  }
  return out;
}

Comparison compare_denominators(const FactoredDenominator& a, const FactoredDenominator& b) {
  return compare_denominators(a.cyclotomic(), b.cyclotomic());
}

std::string to_string(const Comparison& c) {
  if (c.equal) return "equal";
  std::ostringstream out;
  out << "differs at";
  for (const auto& diff : c.differences) out << " phi" << diff.d << " (" << diff.left << " vs " << diff.right << ")";
  return out.str();
}

}  // namespace tracepoincare::denomconj
