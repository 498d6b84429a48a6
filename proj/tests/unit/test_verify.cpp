#include <doctest.h>

#include <cmath>

#include "tracepoincare/closedforms.hpp"
#include "tracepoincare/fixtures.hpp"
#include "tracepoincare/molien.hpp"
#include "tracepoincare/verify.hpp"

using namespace tracepoincare;
using namespace tracepoincare::verify;
using closedforms::mixed_n2_closed;
using closedforms::pure_n2_closed;
using molien::Ring;

namespace {

Rational power(long base, int e) {
  Rational out = 1;
  for (int i = 0; i < std::abs(e); ++i) out *= base;
  return e >= 0 ? out : Rational(1) / out;
}

FactoredRationalFunction pure_n3(int k) {
  return {*fixtures::numerator("pure_n3", k), *fixtures::proven_denominator({3, k, Ring::Pure})};
}

}  // namespace

TEST_CASE("functional equation signs") {
  CHECK(check_functional_equation(pure_n2_closed(2), 2, 2) == -1);
  for (int k = 3; k <= 8; ++k) {
    const int s = check_functional_equation(pure_n2_closed(k), 2, k);
    CHECK((s == 1 || s == -1));
    CHECK(numerator_symmetric(pure_n2_closed(k)));
  }
  for (int k = 3; k <= 10; ++k) CHECK_NOTHROW(check_functional_equation(mixed_n2_closed(k), 2, k));
  for (int k = 2; k <= 4; ++k) CHECK_NOTHROW(check_functional_equation(pure_n3(k), 3, k));
}

TEST_CASE("functional equation is invariant under rewriting the denominator") {
  FactoredRationalFunction f = pure_n2_closed(4);
  FactoredRationalFunction g = f.rebased({{1, 7}, {2, 8}, {3, 1}});
  CHECK(check_functional_equation(g, 2, 4) == check_functional_equation(f, 2, 4));
}

TEST_CASE("corrupted numerator violates the functional equation") {
  FactoredRationalFunction f = pure_n2_closed(4);
  std::vector<Rational> c(f.numerator.coefficients().begin(), f.numerator.coefficients().end());
  c[1] = -c[1];
  f.numerator = Polynomial(c);
  CHECK_THROWS_AS(check_functional_equation(f, 2, 4), FunctionalEquationViolated);
  try {
    check_functional_equation(f, 2, 4);
  } catch (const FunctionalEquationViolated& e) {
    CHECK_FALSE(e.residual().is_zero());
  }
}

TEST_CASE("mixed series for k = 2 has no functional equation with this degree") {
  // 1 / ((1-t)^4 (1-t^2)) has degree 6 < k n^2 = 8.
  FactoredRationalFunction f{Polynomial{1}, {{1, 4}, {2, 1}}};
  CHECK_THROWS_AS(check_functional_equation(f, 2, 2), FunctionalEquationViolated);
}

TEST_CASE("pole order at one") {
  CHECK(check_pole_order(pure_n2_closed(2), 2, 2) == 5);
  CHECK(check_pole_order(mixed_n2_closed(3), 2, 3) == 9);
  CHECK(check_pole_order(pure_n3(2), 3, 2) == 10);
  FactoredRationalFunction padded{Polynomial{1, -1}, {{1, 3}, {2, 3}}};
  CHECK(pole_order_at_one(padded) == 5);
  CHECK_THROWS_AS(check_pole_order(pure_n2_closed(2), 2, 3), PoleOrderMismatch);
}

TEST_CASE("leastness certificates") {
  for (int k = 2; k <= 8; ++k) CHECK(leastness_certificate(pure_n2_closed(k)).least);
  LeastnessReport r = leastness_certificate(mixed_n2_closed(6));
  CHECK(r.least);
  CHECK(r.numerator_factors == std::vector<std::pair<int, int>>{{4, 1}});
  CHECK(leastness_certificate(mixed_n2_closed(5)).numerator_factors.empty());
  FactoredRationalFunction f{Polynomial::one_minus_power(2), {{1, 1}, {2, 1}}};
  LeastnessReport bad = leastness_certificate(f);
  CHECK_FALSE(bad.least);
  REQUIRE(bad.denominator_factors.size() == 2);
  CHECK(bad.denominator_factors[0].cancels());
  CHECK(bad.denominator_factors[1].cancels());
}

TEST_CASE("asymptotic constants") {
  AsymptoticEstimate e2 = asymptotics(pure_n2_closed(2));
  CHECK(e2.d == 5);
  CHECK(e2.A == make_rational(1, 8));
  for (int k = 2; k <= 8; ++k) {
    CAPTURE(k);
    const Rational catalan_k(catalan(static_cast<unsigned long>(k - 2)));
    AsymptoticEstimate p = asymptotics(pure_n2_closed(k));
    CHECK(p.d == 4 * k - 3);
    CHECK(p.A == catalan_k * power(2, 1 - 2 * k));
    if (k >= 3) CHECK(asymptotics(mixed_n2_closed(k)).A == catalan_k * power(2, 3 - 2 * k));
  }
  for (int k = 2; k <= 4; ++k) {
    AsymptoticEstimate e = asymptotics(pure_n3(k));
    CHECK(e.d == 9 * (k - 1) + 1);
    CHECK(e.A == Rational(*fixtures::pure_n3_value_at_one(k)) * power(2, 4 - 4 * k) * power(3, 2 - 3 * k));
  }
  AsymptoticEstimate partial = asymptotics(pure_n2_closed(3), true);
  CHECK(partial.d == 10);
  CHECK(partial.A == asymptotics(pure_n2_closed(3)).A);
  CHECK_THROWS_AS(asymptotics(FactoredRationalFunction{Polynomial{1}, {{2, 2}}}), DominanceViolated);
}

TEST_CASE("ratio test") {
  CHECK(asymptotic_ratio_test(FactoredRationalFunction{Polynomial{1}, {{1, 3}}}, 100) == 1);
  for (auto [k, m] : {std::pair{3, 5000L}, std::pair{2, 2000L}}) {
    const double r = asymptotic_ratio_test(pure_n2_closed(k), m).get_d();
    CHECK(r >= 0.99);
    CHECK(r <= 1.01);
  }
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    double previous = HUGE_VAL;
    for (long m : {100L, 1000L, 5000L}) {
      const double gap = std::abs(asymptotic_ratio_test(pure_n2_closed(k), m).get_d() - 1);
      CHECK(gap < previous);
      previous = gap;
    }
  }
}

TEST_CASE("growth constant denominators") {
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    for (bool partial : {false, true}) {
      CHECK(check_constant_denominator(asymptotics(pure_n2_closed(k), partial), {2, k, Ring::Pure}, partial).divides);
      if (k >= 3) {
        CHECK(check_constant_denominator(asymptotics(mixed_n2_closed(k), partial), {2, k, Ring::Mixed}, partial)
                  .divides);
      }
    }
  }
  for (int k = 2; k <= 4; ++k) CHECK(check_constant_denominator(asymptotics(pure_n3(k)), {3, k, Ring::Pure}).divides);
}

TEST_CASE("invariant report") {
  Report r = check_invariants(pure_n2_closed(5), {2, 5, Ring::Pure});
  CHECK(r.passed());
  CHECK(r.results().size() == 4);
  nlohmann::json j = r.to_json();
  CHECK(j["status"] == "pass");
  CHECK(j["checks"][0]["witness"]["sign"] == -1);
  FactoredRationalFunction wrong{Polynomial{1, 2}, {{1, 2}, {2, 3}}};
  Report bad = check_invariants(wrong, {2, 2, Ring::Pure});
  CHECK_FALSE(bad.passed());
  CHECK(bad.to_json()["status"] == "fail");
}
