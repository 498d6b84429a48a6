#include "tracepoincare/closedforms.hpp"

#include <functional>
#include <stdexcept>

namespace tracepoincare::closedforms {

namespace {

void require_k(int k, int minimum) {
  if (k < minimum) throw std::invalid_argument("k must be >= " + std::to_string(minimum));
}

Polynomial t_power(int e) { return Polynomial::monomial(1, e); }

/// sum_j p_j(t) z^j with polynomial coefficients in t.
class ZPolynomial {
 public:
  explicit ZPolynomial(std::vector<Polynomial> by_z_power) : coeffs_(std::move(by_z_power)) {}

  ZPolynomial derivative() const {
    std::vector<Polynomial> out;
    for (std::size_t j = 1; j < coeffs_.size(); ++j) out.push_back(coeffs_[j] * Rational(static_cast<long>(j)));
    return ZPolynomial(std::move(out));
  }

  /// Multiplication by c(t) z^shift.
  ZPolynomial times(const Polynomial& c, int shift) const {
    std::vector<Polynomial> out(coeffs_.size() + static_cast<std::size_t>(shift));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j + static_cast<std::size_t>(shift)] = coeffs_[j] * c;
    return ZPolynomial(std::move(out));
  }

  ZPolynomial operator-(const ZPolynomial& rhs) const {
    std::vector<Polynomial> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j] += coeffs_[j];
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[j] -= rhs.coeffs_[j];
    return ZPolynomial(std::move(out));
  }

  /// Substitutes z = t.
  Polynomial on_diagonal() const {
    Polynomial out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out += coeffs_[j] * t_power(static_cast<int>(j));
    return out;
  }

 private:
  std::vector<Polynomial> coeffs_;
};

/// (1 - t^i)^e as a series for any sign of e.
TruncatedSeries one_minus_power_series(int i, int e, int order) {
  if (e <= 0) return inverse_power_series(i, -e, order);
  return series_of(pow(Polynomial::one_minus_power(i), static_cast<unsigned>(e)), order);
}

TruncatedSeries from_terms(int order, auto&& coefficient_of_index, auto&& degree_of_index, int first_index = 0) {
  TruncatedSeries s(order);
  for (int a = first_index;; ++a) {
    const int d = degree_of_index(a);
    if (d > order) break;
    if (d >= 0) s[d] += coefficient_of_index(a);
  }
  return s;
}

ReadingCheck compare(const std::string& reading, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  ReadingCheck out{reading, true, -1};
  for (int d = 0; d <= std::min(lhs.order(), rhs.order()); ++d) {
    if (lhs[d] != rhs[d]) {
      out.holds = false;
      out.first_mismatch = d;
      break;
    }
  }
  return out;
}

Rational narayana_coefficient(int k, int i) {
  return make_rational(binomial(k - 2, i) * binomial(k - 2, i + 1), k - 2);
}

}  // namespace

FactoredRationalFunction pure_n2_derivative_formula(int k) {
  require_k(k, 2);
  // f = P(z,t) / (tz - 1)^m; f' = [P_z (tz - 1) - m t P] / (tz - 1)^{m+1}.
  const Polynomial t = t_power(1);
  const Polynomial minus_one = Polynomial::constant(-1);
  std::vector<Polynomial> start(static_cast<std::size_t>(k + 1));
  start[static_cast<std::size_t>(k - 2)] = Polynomial::constant(1);
  start[static_cast<std::size_t>(k - 1)] = Polynomial::constant(-2);
  start[static_cast<std::size_t>(k)] = Polynomial::constant(1);
  ZPolynomial p(std::move(start));
  int m = k;
  for (int step = 0; step < k - 1; ++step) {
    ZPolynomial dp = p.derivative();
    p = (dp.times(t, 1) - dp.times(Polynomial::constant(1), 0)) - p.times(t * Rational(m), 0);
    ++m;
  }
  // (tz - 1)^m at z = t is (t^2 - 1)^m = (-1)^m (1 - t^2)^m, m = 2k - 1.
  Rational scale = make_rational((k % 2 == 0) ? -1 : 1, Integer(2) * factorial(static_cast<unsigned long>(k - 1)));
  if (m % 2 != 0) scale = -scale;
  FactoredRationalFunction raw{p.on_diagonal() * scale, FactoredDenominator{{1, 2 * k}, {2, m}}};
  return raw.rebased(FactoredDenominator{{1, 2 * k - 2}, {2, 2 * k - 1}});
}

FactoredRationalFunction pure_n2_residue_sum(int k) {
  require_k(k, 2);
  const int top = 2 * k - 1;  // largest (1 - t^2) power, reached at c = k - 1
  const Polynomial t_minus_one = Polynomial{-1, 1};
  Polynomial total;
  for (int b = 0; b <= std::min(2, k - 1); ++b) {
    for (int a = 0; a + b <= k - 1; ++a) {
      const int c = k - 1 - a - b;
      const Integer falling = falling_factorial(k - 2, static_cast<unsigned long>(a));
      if (falling == 0) continue;
      Integer weight = falling * falling_factorial(2, static_cast<unsigned long>(b)) *
                       rising_factorial(k, static_cast<unsigned long>(c));
      Integer under = Integer(2) * factorial(static_cast<unsigned long>(a)) *
                      factorial(static_cast<unsigned long>(b)) * factorial(static_cast<unsigned long>(c));
      Polynomial term = t_power(k - 2 - a + c) * pow(t_minus_one, static_cast<unsigned>(2 - b)) *
                        pow(Polynomial::one_minus_power(2), static_cast<unsigned>(top - (k + c)));
      total += term * make_rational(-weight, under);
    }
  }
  FactoredRationalFunction raw{total, FactoredDenominator{{1, 2 * k}, {2, top}}};
  return raw.rebased(FactoredDenominator{{1, 2 * k - 2}, {2, top}});
}

FactoredRationalFunction pure_n2_closed(int k) {
  require_k(k, 2);
  std::vector<Rational> num(static_cast<std::size_t>(2 * (k - 2) + 1));
  for (int i = 0; i <= k - 2; ++i) {
    num[static_cast<std::size_t>(2 * i)] = Rational(binomial(k - 2, i) * binomial(k - 2, i));
    if (2 * i + 1 < static_cast<int>(num.size())) {
      num[static_cast<std::size_t>(2 * i + 1)] = Rational(-binomial(k - 2, i) * binomial(k - 2, i + 1));
    }
  }
  return {Polynomial(std::move(num)), FactoredDenominator{{1, 2 * k - 2}, {2, 2 * k - 1}}};
}

FactoredRationalFunction mixed_n2_closed(int k) {
  require_k(k, 3);
  std::vector<Rational> num(static_cast<std::size_t>(2 * (k - 3) + 1));
  for (int i = 0; i <= k - 3; ++i) num[static_cast<std::size_t>(2 * i)] = narayana_coefficient(k, i);
  return {Polynomial(std::move(num)), FactoredDenominator{{1, 2 * k}, {2, 2 * k - 3}}};
}

Polynomial pure_n2_unreduced_numerator(int k) {
  require_k(k, 2);
  std::vector<Rational> num(static_cast<std::size_t>(2 * k + 1));
  for (int i = 0; i <= k; ++i) {
    num[static_cast<std::size_t>(2 * i)] += Rational(binomial(k - 1, i) * binomial(k - 1, i));
    if (2 * i + 1 <= 2 * k) num[static_cast<std::size_t>(2 * i + 1)] -= Rational(binomial(k, i + 1) * binomial(k - 2, i));
  }
  return Polynomial(std::move(num));
}

int residue_sum_sign(int k) {
  const FactoredRationalFunction sum = pure_n2_residue_sum(k);
  const FactoredRationalFunction closed = pure_n2_closed(k);
  if (same_function(sum, closed)) return 1;
  if (same_function(FactoredRationalFunction{-sum.numerator, sum.denominator}, closed)) return -1;
  return 0;
}

std::string to_string(Identity which) {
  switch (which) {
    case Identity::SquaredBinomialSum: return "squared-binomial-sum";
    case Identity::AdjacentBinomialSum: return "adjacent-binomial-sum";
    case Identity::BracketSimplification: return "bracket-simplification";
    case Identity::NarayanaSum: return "narayana-sum";
  }
  return "unknown";
}

IdentityReport verify_identity(Identity which, int k, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("identity range bound must be >= 1");
  IdentityReport report{which, k, max_degree, {}};
  const int order = max_degree;
  switch (which) {
    case Identity::SquaredBinomialSum: {
      require_k(k, 1);
      auto lhs = from_terms(
          order, [&](int a) { return Rational(binomial(a + k - 1, k - 1) * binomial(a + k - 1, k - 1)); },
          [](int a) { return 2 * a; });
      auto poly = from_terms(
          order, [&](int a) { return Rational(binomial(k - 1, a) * binomial(k - 1, a)); },
          [&](int a) { return a <= k - 1 ? 2 * a : order + 1; });
      report.readings.push_back(compare("printed", lhs, one_minus_power_series(2, 1 - 2 * k, order) * poly));
      break;
    }
    case Identity::AdjacentBinomialSum: {
      require_k(k, 2);
      auto rhs_poly = from_terms(
          order, [&](int a) { return Rational(binomial(k - 2, a) * binomial(k, a + 1)); },
          [&](int a) { return a <= k - 1 ? 2 * a + 1 : order + 1; });
      auto rhs = one_minus_power_series(2, 1 - 2 * k, order) * rhs_poly;
      auto printed = from_terms(
          order, [&](int a) { return Rational(binomial(a + k, k - 1) * binomial(a + k - 1, k - 1)); },
          [](int a) { return 2 * a + 1; });
      auto display = from_terms(
          order, [&](int a) { return Rational(binomial(a + k - 1, k - 1) * binomial(a + k - 2, k - 2)); },
          [](int a) { return 2 * a - 1; }, 1);
      report.readings.push_back(compare("printed", printed, rhs));
      report.readings.push_back(compare("expansion-display", display, rhs));
      break;
    }
    case Identity::BracketSimplification: {
      require_k(k, 2);
      auto lhs = from_terms(
          order,
          [&](int a) {
            return Rational(binomial(a + k - 1, k - 1) * binomial(a + k - 1, k - 1) -
                            binomial(a + k, k - 1) * binomial(a + k - 2, k - 1));
          },
          [](int a) { return a; });
      auto rhs = from_terms(
          order,
          [&](int a) { return make_rational(binomial(a + k - 1, k - 2) * binomial(a + k - 1, k - 1), a + k - 1); },
          [](int a) { return a; });
      report.readings.push_back(compare("printed", lhs, rhs));
      break;
    }
    case Identity::NarayanaSum: {
      require_k(k, 3);
      auto lhs = from_terms(
          order,
          [&](int a) { return make_rational(binomial(a + k - 1, k - 2) * binomial(a + k - 1, k - 1), a + k - 1); },
          [](int a) { return a; });
      auto poly = from_terms(
          order, [&](int i) { return narayana_coefficient(k, i); }, [&](int i) { return i <= k - 3 ? i : order + 1; });
      report.readings.push_back(compare("printed", lhs, one_minus_power_series(1, 3 - 2 * k, order) * poly));
      break;
    }
  }
  return report;
}

BRecurrenceReport check_b_recurrence(int k) {
  require_k(k, 4);
  auto b_of = [](int j) {
    FactoredRationalFunction c = pure_n2_closed(j);
    return pow(Polynomial::one_minus_power(1), static_cast<unsigned>(2 * j)) * c;
  };
  const Polynomial lead{Rational(2 * (k - 2)), Rational(-2), Rational(2 * (k - 2))};  // 2(kt^2 - 2t^2 + k - t - 2)
  FactoredRationalFunction rhs = lead * b_of(k - 1) - Polynomial::constant(k - 3) * b_of(k - 2);
  FactoredRationalFunction lhs =
      Polynomial::constant(k - 1) * pow(Polynomial::one_minus_power(2), 2) * b_of(k);
  FactoredRationalFunction diff = lhs - rhs;
  return {k, diff.numerator.is_zero(), diff.numerator};
}

namespace {

using Sequence = std::function<TruncatedSeries(int)>;

/// p2 X(k+2) + p1 X(k+1) + p0 X(k), truncated at `order`.
RecurrenceCheck apply(const std::string& name, int k, const Polynomial& p2, const Polynomial& p1,
                      const Polynomial& p0, const Sequence& x, int order) {
  TruncatedSeries total = series_of(p2, order) * x(k + 2) + series_of(p1, order) * x(k + 1) + series_of(p0, order) * x(k);
  RecurrenceCheck out{name, k, true, -1};
  for (int d = 0; d <= order; ++d) {
    if (total[d] != 0) {
      out.holds = false;
      out.first_mismatch = d;
      break;
    }
  }
  return out;
}

RecurrenceCheck equal(const std::string& name, int k, const TruncatedSeries& a, const TruncatedSeries& b) {
  ReadingCheck r = compare(name, a, b);
  return {name, k, r.holds, r.first_mismatch};
}

}  // namespace

std::vector<RecurrenceCheck> check_operator_recurrences(int k_max, int order) {
  if (k_max < 4) throw std::invalid_argument("k_max must be >= 4");
  std::vector<RecurrenceCheck> out;

  const Sequence f = [order](int k) {
    return from_terms(
        order, [k](int a) { return Rational(binomial(a + k - 1, k - 1) * binomial(a + k - 1, k - 1)); },
        [](int a) { return a; });
  };
  const Sequence g = [order](int k) {
    auto poly = from_terms(
        order, [k](int a) { return Rational(binomial(k - 1, a) * binomial(k - 1, a)); },
        [&](int a) { return a <= std::max(k - 1, 0) ? a : order + 1; });
    return one_minus_power_series(1, 1 - 2 * k, order) * poly;
  };
  const TruncatedSeries zero(order);
  const TruncatedSeries geometric = inverse_power_series(1, 1, order);
  out.push_back(equal("squared-initial-F0", 0, f(0), zero));
  out.push_back(equal("squared-initial-G0", 0, g(0), zero));
  out.push_back(equal("squared-initial-F1", 1, f(1), geometric));
  out.push_back(equal("squared-initial-G1", 1, g(1), geometric));
  for (int k = 0; k <= k_max; ++k) {
    const Polynomial p2{Rational(k + 1), Rational(-2 * k - 2), Rational(k + 1)};
    const Polynomial p1{Rational(-2 * k - 1), Rational(-2 * k - 1)};
    const Polynomial p0 = Polynomial::constant(k);
    out.push_back(apply("squared-F", k, p2, p1, p0, f, order));
    out.push_back(apply("squared-G", k, p2, p1, p0, g, order));
  }

  const Sequence nar_lhs = [order](int k) {
    return from_terms(
        order,
        [k](int a) { return make_rational(binomial(a + k - 1, k - 2) * binomial(a + k - 1, k - 1), a + k - 1); },
        [](int a) { return a; });
  };
  const Sequence nar_rhs = [order](int k) {
    auto poly = from_terms(
        order, [k](int i) { return narayana_coefficient(k, i); }, [&](int i) { return i <= k - 3 ? i : order + 1; });
    return one_minus_power_series(1, 3 - 2 * k, order) * poly;
  };
  for (int k = 3; k <= k_max; ++k) {
    const Polynomial p2{Rational(k + 1), Rational(-2 * k - 2), Rational(k + 1)};
    const Polynomial p1{Rational(1 - 2 * k), Rational(1 - 2 * k)};
    const Polynomial p0 = Polynomial::constant(k - 2);
    out.push_back(apply("narayana-lhs", k, p2, p1, p0, nar_lhs, order));
    out.push_back(apply("narayana-rhs", k, p2, p1, p0, nar_rhs, order));
  }

  const Sequence adj_lhs = [order](int k) {
    return from_terms(
        order, [k](int a) { return Rational(binomial(a + k, k - 1) * binomial(a + k - 1, k - 1)); },
        [](int a) { return 2 * a + 1; });
  };
  const Sequence adj_rhs = [order](int k) {
    auto poly = from_terms(
        order, [k](int a) { return Rational(binomial(k - 2, a) * binomial(k, a + 1)); },
        [&](int a) { return a <= std::max(k - 1, 0) ? 2 * a + 1 : order + 1; });
    return one_minus_power_series(2, 1 - 2 * k, order) * poly;
  };
  auto scaled = [order](const Sequence& x) {
    return Sequence([order, x](int k) { return one_minus_power_series(2, 2 * k - 1, order) * x(k); });
  };
  for (int k = 1; k <= k_max; ++k) {
    const long kk = k;
    const Polynomial p2 = Polynomial::constant(kk * kk + kk);
    const Polynomial p1{Rational(-2 * kk * kk - kk), 0, Rational(-2 * kk * kk - kk)};
    const Polynomial p0{Rational(kk * kk - 1), 0, Rational(-2 * kk * kk + 2), 0, Rational(kk * kk - 1)};
    out.push_back(apply("adjacent-lhs", k, p2, p1, p0, scaled(adj_lhs), order));
    out.push_back(apply("adjacent-rhs", k, p2, p1, p0, scaled(adj_rhs), order));
    out.push_back(apply("adjacent-raw-lhs", k, p2, p1, p0, adj_lhs, order));
  }
  return out;
}

}  // namespace tracepoincare::closedforms
