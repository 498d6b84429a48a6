#include "tracepoincare/series.hpp"

namespace tracepoincare {

TruncatedSeries series_of(const Polynomial& p, int order) {
  TruncatedSeries s(order);
  for (int i = 0; i <= std::min(order, p.degree()); ++i) s[i] = p[i];
  return s;
}

TruncatedSeries series_of(const Polynomial& num, const Polynomial& den, int order) {
  if (den[0] == 0) throw std::domain_error("series expansion needs a nonzero constant term in the denominator");
  TruncatedSeries s(order);
  const Rational inv0 = 1 / den[0];
  const int dd = den.degree();
  for (int m = 0; m <= order; ++m) {
    Rational acc = num[m];
    for (int j = 1; j <= std::min(m, dd); ++j) {
      if (den[j] != 0) acc -= den[j] * s[m - j];
    }
    s[m] = acc * inv0;
  }
  return s;
}

TruncatedSeries inverse_power_series(int i, int e, int order) {
  if (i < 1 || e < 0) throw std::invalid_argument("inverse_power_series needs i >= 1, e >= 0");
  // (1 - t^i)^{-e} = sum_a C(a+e-1, e-1) t^{i a}
  TruncatedSeries s(order);
  if (e == 0) {
    s[0] = 1;
    return s;
  }
  for (int a = 0; i * a <= order; ++a) s[i * a] = binomial(a + e - 1, e - 1);
  return s;
}

TruncatedSeries inverse(const TruncatedSeries& s) {
  Polynomial den(std::vector<Rational>(s.coefficients().begin(), s.coefficients().end()));
  return series_of(Polynomial::constant(1), den, s.order());
}

TruncatedSeries to_rational(const IntegerSeries& s) {
  TruncatedSeries out(s.order());
  for (int i = 0; i <= s.order(); ++i) out[i] = Rational(s[i]);
  return out;
}

}  // namespace tracepoincare
