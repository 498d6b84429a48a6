#pragma once

// JSON forms shared by the cache, fixtures, and reports:
//   polynomial / series   ["num/den", ...]  lowest degree first
//   FactoredDenominator   {"i": exponent}
//   CyclotomicExponents   {"d": exponent}

#include <json.hpp>

#include "tracepoincare/denominator.hpp"
#include "tracepoincare/polynomial.hpp"
#include "tracepoincare/rational_function.hpp"
#include "tracepoincare/series.hpp"

namespace tracepoincare {

nlohmann::json coefficients_to_json(std::span<const Rational> coeffs);
std::vector<Rational> coefficients_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const TruncatedSeries& s);
nlohmann::json to_json(const FactoredDenominator& d);
nlohmann::json to_json(const CyclotomicExponents& c);
nlohmann::json to_json(const FactoredRationalFunction& f);

Polynomial polynomial_from_json(const nlohmann::json& j);
TruncatedSeries series_from_json(const nlohmann::json& j);
FactoredDenominator denominator_from_json(const nlohmann::json& j);
CyclotomicExponents cyclotomic_from_json(const nlohmann::json& j);
FactoredRationalFunction rational_function_from_json(const nlohmann::json& j);

}  // namespace tracepoincare
