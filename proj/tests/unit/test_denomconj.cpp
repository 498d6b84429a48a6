#include <doctest.h>

#include "tracepoincare/denomconj.hpp"
#include "tracepoincare/fixtures.hpp"

using namespace tracepoincare;
using namespace tracepoincare::denomconj;
using molien::Ring;

TEST_CASE("exponent profiles") {
  CHECK(profile(3, 2, Ring::Pure).values == std::map<int, int>{{1, 4}, {2, 2}, {3, 2}});
  CHECK(profile(4, 2, Ring::Mixed).values == std::map<int, int>{{1, 8}, {2, 4}, {3, 2}, {4, 0}});
  for (int k = 2; k <= 7; ++k) CHECK(profile(2, k, Ring::Pure).values == std::map<int, int>{{1, 2 * k - 2}, {2, k}});
  CHECK_THROWS_AS(profile(1, 2, Ring::Pure), std::invalid_argument);
  CHECK_THROWS_AS(profile(3, 1, Ring::Pure), std::invalid_argument);
}

TEST_CASE("beta differs from alpha only at the ends") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= 6; ++k) {
      ExponentProfile a = profile(n, k, Ring::Pure);
      ExponentProfile b = profile(n, k, Ring::Mixed);
      for (int i = 1; i <= n; ++i) {
        int expected = i == 1 ? 2 : (i == n ? -2 : 0);
        if (n == 1) expected = 0;
        CHECK(b(i) - a(i) == expected);
      }
    }
  }
}

TEST_CASE("double products reduce to the profiles") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 2; k <= 4; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(verify_profile_product(n, k, Ring::Pure).holds);
      CHECK(verify_profile_product(n, k, Ring::Mixed).holds);
    }
  }
  CHECK(verify_profile_product(3, 2, Ring::Pure).expected == FactoredDenominator{{1, 4}, {2, 2}, {3, 2}});
  CHECK(verify_profile_product(8, 2, Ring::Pure).holds);
  CHECK_THROWS_AS(verify_profile_product(9, 2, Ring::Pure), std::invalid_argument);
}

TEST_CASE("conjectured denominators for the proven cases") {
  for (int k = 2; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(conjectured_denominator(2, k, Ring::Pure).product == FactoredDenominator{{1, 2 * k - 2}, {2, 2 * k - 1}});
    CHECK(conjectured_denominator(3, k, Ring::Pure).product ==
          FactoredDenominator{{1, 2 * k - 2}, {2, 4 * k - 4}, {3, 3 * k - 2}});
    for (const auto& f : fixtures::proven_denominators(k)) {
      CAPTURE(f.name);
      ConjecturedDenominator c = conjectured_denominator(f.spec.n, k, f.spec.ring);
      CHECK(compare_denominators(c.cyclotomic, f.denominator.cyclotomic()).equal);
    }
  }
}

TEST_CASE("conjectured denominators for the k = 2 tables") {
  auto table = fixtures::tabulated_denominators();
  CHECK(table.size() == 6);
  for (const auto& f : table) {
    CAPTURE(f.name);
    ConjecturedDenominator c = conjectured_denominator(f.spec.n, 2, f.spec.ring);
    CHECK(compare_denominators(c.cyclotomic, f.denominator.cyclotomic()).equal);
    REQUIRE(c.product.has_value());
    CHECK(*c.product == f.denominator);
  }
  CHECK(conjectured_denominator(4, 2, Ring::Pure).product == FactoredDenominator{{1, 3}, {2, 4}, {3, 5}, {4, 5}});
  CHECK(conjectured_denominator(6, 2, Ring::Mixed).product ==
        FactoredDenominator{{1, 7}, {2, 3}, {3, 6}, {4, 9}, {5, 7}, {6, 5}});
}

TEST_CASE("total pole order at one") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= 6; ++k) {
      for (Ring ring : {Ring::Pure, Ring::Mixed}) {
        CHECK(conjectured_denominator(n, k, ring).cyclotomic.exponent(1) == (k - 1) * n * n + 1);
      }
    }
  }
}

TEST_CASE("numerator degrees for n = 3") {
  for (int k = 2; k <= 8; ++k) {
    CHECK(conjectured_denominator(3, k, Ring::Pure).cyclotomic.degree() - 9 * k == 10 * k - 16);
    CHECK(conjectured_denominator(3, k, Ring::Mixed).cyclotomic.degree() - 9 * k == 10 * k - 20);
  }
}

TEST_CASE("lcm reading disagrees for n = 2") {
  for (int k = 2; k <= 6; ++k) {
    ConjecturedDenominator c = conjectured_denominator(2, k, Ring::Pure);
    CHECK(c.cyclotomic.exponent(1) == 4 * k - 3);
    CHECK(c.lcm_reading.exponent(1) == 3 * k - 3);
  }
}

TEST_CASE("literal derivative of F") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 2; k <= 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const int order = (n - 1) * (k - 1);
      CHECK(derivative_denominator(profile(n, k, Ring::Pure).as_denominator(), order) ==
            conjectured_denominator(n, k, Ring::Pure).cyclotomic);
    }
  }
  // G has no pole at the primitive 4th roots when n = 4, k = 2, so
  // differentiating cannot create one; the tabulated denominator has phi4^3.
  CyclotomicExponents literal = derivative_denominator(profile(4, 2, Ring::Mixed).as_denominator(), 3);
  CHECK(literal.exponent(4) == 0);
  CHECK(conjectured_denominator(4, 2, Ring::Mixed).cyclotomic.exponent(4) == 3);
  CHECK(derivative_denominator(FactoredDenominator{{1, 2}}, 0) == CyclotomicExponents{{1, 2}});
  CHECK(derivative_denominator(FactoredDenominator{{1, 2}}, 3) == CyclotomicExponents{{1, 5}});
}

TEST_CASE("comparisons") {
  CHECK(compare_denominators(FactoredDenominator{{1, 2}, {2, 3}}, FactoredDenominator{{1, 2}, {2, 3}}).equal);
  Comparison c = compare_denominators(conjectured_denominator(3, 2, Ring::Pure).cyclotomic,
                                      FactoredDenominator{{1, 2}, {2, 4}, {3, 3}}.cyclotomic());
  CHECK_FALSE(c.equal);
  // (1-t^3)^3 also carries one fewer factor of phi1.
  REQUIRE(c.differences.size() == 2);
  CHECK(c.differences[1].d == 3);
  CHECK(c.differences[1].left == 4);
  CHECK(c.differences[1].right == 3);
  CHECK(to_string(c) == "differs at phi1 (10 vs 9) phi3 (4 vs 3)");
  CHECK(compare_denominators(conjectured_denominator(5, 2, Ring::Pure).cyclotomic,
                             FactoredDenominator{{2, 6}, {3, 8}, {4, 6}, {5, 6}}.cyclotomic())
            .equal);
}

TEST_CASE("fixture tables load") {
  CHECK(fixtures::proven_denominators(4).size() == 4);
  CHECK(fixtures::numerator("pure_n2", 8)->degree() == 12);
  CHECK_FALSE(fixtures::numerator("pure_n2", 9).has_value());
  CHECK(*fixtures::pure_n3_value_at_one(4) == 1636);
  CHECK(fixtures::catalan_reference().size() == 11);
  CHECK(fixtures::narayana_reference()[3] == std::vector<Integer>{1, 6, 6, 1});
  CHECK(fixtures::proven_denominator({3, 4, Ring::Mixed}) == FactoredDenominator{{1, 8}, {2, 12}, {3, 8}});
}
