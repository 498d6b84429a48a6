#include "tracepoincare/rational_function.hpp"

#include <algorithm>
#include <deque>

namespace tracepoincare {

namespace {

FactoredDenominator common_multiple(const FactoredDenominator& a, const FactoredDenominator& b) {
  std::map<int, int> exps = a.exponents();
  for (auto [i, e] : b.exponents()) exps[i] = std::max(exps[i], e);
  return FactoredDenominator(std::move(exps));
}

FactoredDenominator quotient(const FactoredDenominator& big, const FactoredDenominator& small) {
  std::map<int, int> exps = big.exponents();
  for (auto [i, e] : small.exponents()) exps[i] -= e;
  return FactoredDenominator(std::move(exps));
}

}  // namespace

FactoredRationalFunction FactoredRationalFunction::rebased(const FactoredDenominator& target) const {
  // numerator * target / denominator, cancelling the shared factors first.
  std::map<int, int> up;
  std::map<int, int> down;
  for (auto [i, e] : target.exponents()) up[i] = e;
  for (auto [i, e] : denominator.exponents()) {
    int shared = std::min(up[i], e);
    up[i] -= shared;
    down[i] = e - shared;
  }
  Polynomial num = numerator * FactoredDenominator(up).expand();
  num = exact_div(num, FactoredDenominator(down).expand());
  return {std::move(num), target};
}

bool same_function(const FactoredRationalFunction& a, const FactoredRationalFunction& b) {
  FactoredDenominator common = common_multiple(a.denominator, b.denominator);
  Polynomial lhs = a.numerator * quotient(common, a.denominator).expand();
  Polynomial rhs = b.numerator * quotient(common, b.denominator).expand();
  return lhs == rhs;
}

FactoredRationalFunction operator+(const FactoredRationalFunction& a, const FactoredRationalFunction& b) {
  FactoredDenominator common = common_multiple(a.denominator, b.denominator);
  Polynomial num = a.numerator * quotient(common, a.denominator).expand() +
                   b.numerator * quotient(common, b.denominator).expand();
  return {std::move(num), std::move(common)};
}

FactoredRationalFunction operator-(const FactoredRationalFunction& a, const FactoredRationalFunction& b) {
  return a + FactoredRationalFunction{-b.numerator, b.denominator};
}

FactoredRationalFunction operator*(const Polynomial& p, const FactoredRationalFunction& f) {
  return {p * f.numerator, f.denominator};
}

FactoredRationalFunction divided_by(const FactoredRationalFunction& f, const FactoredDenominator& extra) {
  return {f.numerator, f.denominator * extra};
}

TruncatedSeries series_of(const FactoredRationalFunction& f, int order) {
  return series_of(f.numerator, f.denominator.expand(), order);
}

Rational coefficient_at(const FactoredRationalFunction& f, long m) {
  if (m < 0) return 0;
  const Polynomial den = f.denominator.expand();
  const int dd = den.degree();
  // window holds c_{j-dd..j-1}; den(0) = 1 for (1 - t^i) products.
  std::deque<Rational> window;
  Rational c;
  for (long j = 0; j <= m; ++j) {
    c = j <= f.numerator.degree() ? f.numerator[static_cast<int>(j)] : Rational(0);
    const int back = static_cast<int>(window.size());
    for (int i = 1; i <= back; ++i) {
      const Rational& di = den[i];
      if (di != 0) c -= di * window[static_cast<std::size_t>(back - i)];
    }
    window.push_back(c);
    if (static_cast<int>(window.size()) > dd) window.pop_front();
  }
  return c;
}

std::string to_string(const FactoredRationalFunction& f) {
  return "(" + to_string(f.numerator) + ") / " + to_string(f.denominator);
}

}  // namespace tracepoincare
