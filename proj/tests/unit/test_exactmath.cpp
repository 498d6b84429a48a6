#include <doctest.h>

#include <random>

#include "tracepoincare/denominator.hpp"
#include "tracepoincare/polynomial.hpp"
#include "tracepoincare/rational.hpp"
#include "tracepoincare/rational_function.hpp"
#include "tracepoincare/serialization.hpp"
#include "tracepoincare/series.hpp"

using namespace tracepoincare;

namespace {

Polynomial random_polynomial(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return Polynomial(std::move(c));
}

FactoredDenominator random_denominator(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 3);
  std::map<int, int> exps;
  for (int i = 1; i <= 4; ++i) exps[i] = e(rng);
  return FactoredDenominator(exps);
}

/// Power-series long division, one coefficient at a time.
std::vector<Rational> long_division(const Polynomial& num, const Polynomial& den, int order) {
  std::vector<Rational> q;
  Polynomial rem = num;
  for (int d = 0; d <= order; ++d) {
    Rational c = rem[d] / den[0];
    q.push_back(c);
    rem -= Polynomial::monomial(c, d) * den;
  }
  return q;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  Rational q = make_rational(6, -4);
  CHECK(to_fraction_string(q) == "-3/2");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(parse_rational("10/-4") == make_rational(-5, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(is_integer(Rational(4)));
  CHECK_FALSE(is_integer(make_rational(1, 3)));
}

TEST_CASE("combinatorial helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(factorial(6) == 720);
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(rising_factorial(3, 3) == 60);
  CHECK(rising_factorial(4, 0) == 1);
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (unsigned long m = 0; m <= 10; ++m) CHECK(catalan(m) == expected[m]);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial one_minus_t{1, -1};
  const Polynomial one_plus_t{1, 1};
  CHECK(one_minus_t * one_plus_t == Polynomial::one_minus_power(2));
  CHECK(exact_div(Polynomial::one_minus_power(4), Polynomial::one_minus_power(2)) == Polynomial{1, 0, 1});
  CHECK_THROWS_AS(exact_div(Polynomial::one_minus_power(3), Polynomial::one_minus_power(2)), NotDivisible);
  CHECK(Polynomial().degree() == -1);
  CHECK((one_minus_t - one_minus_t).is_zero());
  CHECK(Polynomial{0, 0, 0}.is_zero());
  CHECK(Polynomial{1, 2, 3}.reversed() == Polynomial{3, 2, 1});
  CHECK(Polynomial{1, 2, 3}.derivative() == Polynomial{2, 6});
  CHECK(Polynomial{1, -2, 4, -2, 1}.evaluate(1) == 2);
  CHECK(is_palindromic(Polynomial{1, -2, 4, -2, 1}));
  CHECK_FALSE(is_palindromic(Polynomial{1, -2, 4, -3, 1}));
  CHECK(divisibility_multiplicity(pow(one_minus_t, 3) * one_plus_t, one_minus_t) == 3);
  CHECK(to_string(Polynomial{1, -2, 4}) == "1 - 2t + 4t^2");
  CHECK(to_string(Polynomial()) == "0");
}

TEST_CASE("exact division undoes multiplication") {
  std::mt19937 rng(20240501);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_polynomial(rng, 8);
    Polynomial b = random_polynomial(rng, 5);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
    DivMod qr = divmod(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    CHECK(qr.remainder.degree() < b.degree());
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == Polynomial{-1, 1});
  CHECK(cyclotomic(2) == Polynomial{1, 1});
  CHECK(cyclotomic(6) == Polynomial{1, -1, 1});
  CHECK(cyclotomic(12) == Polynomial{1, 0, -1, 0, 1});
  for (int i = 1; i <= 12; ++i) {
    CAPTURE(i);
    Polynomial product = Polynomial::constant(1);
    for (int d = 1; d <= i; ++d) {
      if (i % d == 0) product *= cyclotomic(d);
    }
    CHECK(product == Polynomial::monomial(1, i) - Polynomial::constant(1));
    CHECK(cyclotomic(i).degree() == euler_phi(i));
    if (i >= 2) CHECK(cyclotomic(i).evaluate(1) == cyclotomic_value_at_one(i));
  }
}

TEST_CASE("denominator cyclotomic form") {
  CHECK(FactoredDenominator{{1, 2}, {2, 3}}.cyclotomic() == CyclotomicExponents{{1, 5}, {2, 3}});
  CHECK(FactoredDenominator{{1, 2}, {2, 4}, {3, 4}}.cyclotomic() == CyclotomicExponents{{1, 10}, {2, 4}, {3, 4}});
  CHECK(FactoredDenominator{}.cyclotomic() == CyclotomicExponents{});
  CHECK(FactoredDenominator{}.expand() == Polynomial{1});
  CHECK_THROWS_AS(CyclotomicExponents({{2, 1}}).to_product_form(), NoProductForm);
  CHECK_FALSE(CyclotomicExponents({{1, 1}, {2, 2}}).try_product_form().has_value());
  CHECK(to_string(FactoredDenominator{{1, 2}, {2, 3}}) == "(1-t)^2(1-t^2)^3");

  const std::vector<FactoredDenominator> known = {
      {{1, 2}, {2, 3}},
      {{1, 6}, {2, 3}},
      {{1, 2}, {2, 4}, {3, 4}},
      {{1, 4}, {2, 4}, {3, 4}},
      {{1, 3}, {2, 4}, {3, 5}, {4, 5}},
      {{2, 6}, {3, 8}, {4, 6}, {5, 6}},
      {{1, 5}, {2, 3}, {3, 6}, {4, 9}, {5, 7}, {6, 7}},
      {{1, 5}, {2, 4}, {3, 5}, {4, 3}},
      {{1, 2}, {2, 6}, {3, 8}, {4, 6}, {5, 4}},
      {{1, 7}, {2, 3}, {3, 6}, {4, 9}, {5, 7}, {6, 5}},
  };
  for (const auto& den : known) {
    CAPTURE(to_string(den));
    CHECK(den.cyclotomic().to_product_form() == den);
    CHECK(den.cyclotomic().expand() == den.expand());
    CHECK(den.cyclotomic().degree() == den.degree());
  }
}

TEST_CASE("series expansion") {
  FactoredRationalFunction f{Polynomial{1}, FactoredDenominator{{1, 2}, {2, 3}}};
  TruncatedSeries s = series_of(f, 4);
  const int expected[] = {1, 2, 6, 10, 20};
  for (int d = 0; d <= 4; ++d) CHECK(s[d] == expected[d]);
  TruncatedSeries g = series_of(FactoredRationalFunction{Polynomial{1}, FactoredDenominator{{1, 1}}}, 3);
  for (int d = 0; d <= 3; ++d) CHECK(g[d] == 1);
  TruncatedSeries h = series_of(FactoredRationalFunction{Polynomial{1, -1}, FactoredDenominator{{1, 1}}}, 2);
  CHECK(h[0] == 1);
  CHECK(h[1] == 0);
  CHECK(h[2] == 0);
}

TEST_CASE("series expansion agrees with long division") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    FactoredRationalFunction f{random_polynomial(rng, 6), random_denominator(rng)};
    TruncatedSeries s = series_of(f, 30);
    std::vector<Rational> q = long_division(f.numerator, f.denominator.expand(), 30);
    for (int d = 0; d <= 30; ++d) CHECK(s[d] == q[static_cast<std::size_t>(d)]);
    CHECK(coefficient_at(f, 30) == q[30]);
    CHECK(coefficient_at(f, 7) == q[7]);
  }
}

TEST_CASE("series arithmetic truncates at the smaller order") {
  TruncatedSeries a = inverse_power_series(1, 1, 5);
  TruncatedSeries b = inverse_power_series(1, 1, 3);
  CHECK((a * b).order() == 3);
  CHECK((a * b)[3] == 4);
  CHECK((a + b).order() == 3);
  TruncatedSeries inv = inverse(a);
  CHECK(inv[0] == 1);
  CHECK(inv[1] == -1);
  CHECK(inv[2] == 0);
  CHECK(a.shifted(2)[2] == 1);
  CHECK(a.shifted(2)[1] == 0);
  CHECK_THROWS(TruncatedSeries(-1));
}

TEST_CASE("rational functions") {
  FactoredRationalFunction f{Polynomial{1}, FactoredDenominator{{1, 2}, {2, 3}}};
  FactoredRationalFunction g = f.rebased(FactoredDenominator{{1, 4}, {2, 3}});
  CHECK(g.numerator == Polynomial{1, -2, 1});
  CHECK(same_function(f, g));
  CHECK_THROWS_AS(f.rebased(FactoredDenominator{{1, 2}, {2, 2}}), NotDivisible);
  FactoredRationalFunction zero = f - g;
  CHECK(zero.numerator.is_zero());
  CHECK(same_function(divided_by(f, FactoredDenominator{{3, 1}}), FactoredRationalFunction{
                                                                      Polynomial{1}, FactoredDenominator{{1, 2}, {2, 3}, {3, 1}}}));
}

TEST_CASE("json round trips") {
  Polynomial p{1, make_rational(-3, 2), 0, 4};
  nlohmann::json j = to_json(p);
  CHECK(j.dump() == R"(["1/1","-3/2","0/1","4/1"])");
  CHECK(polynomial_from_json(j) == p);
  FactoredDenominator den{{1, 2}, {3, 4}};
  CHECK(to_json(den).dump() == R"({"1":2,"3":4})");
  CHECK(denominator_from_json(to_json(den)) == den);
  FactoredRationalFunction f{p, den};
  CHECK(rational_function_from_json(to_json(f)) == f);
  CHECK_THROWS(polynomial_from_json(nlohmann::json::parse(R"(["1/0"])")));
}
