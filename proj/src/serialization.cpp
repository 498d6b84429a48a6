#include "tracepoincare/serialization.hpp"

#include <stdexcept>

namespace tracepoincare {

using nlohmann::json;

json coefficients_to_json(std::span<const Rational> coeffs) {
  json out = json::array();
  for (const auto& c : coeffs) out.push_back(to_fraction_string(c));
  return out;
}

std::vector<Rational> coefficients_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficient list must be a JSON array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_string()) {
      out.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      out.emplace_back(item.get<long>());
    } else {
      throw std::invalid_argument("coefficient must be a \"num/den\" string");
    }
  }
  return out;
}

json to_json(const Polynomial& p) { return coefficients_to_json(p.coefficients()); }

json to_json(const TruncatedSeries& s) { return coefficients_to_json(s.coefficients()); }

namespace {

json exponent_map(const std::map<int, int>& exps) {
  json out = json::object();
  for (auto [i, e] : exps) out[std::to_string(i)] = e;
  return out;
}

std::map<int, int> exponent_map_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("exponent map must be a JSON object");
  std::map<int, int> out;
  for (const auto& [key, value] : j.items()) out[std::stoi(key)] = value.get<int>();
  return out;
}

}  // namespace

json to_json(const FactoredDenominator& d) { return exponent_map(d.exponents()); }

json to_json(const CyclotomicExponents& c) { return exponent_map(c.exponents()); }

json to_json(const FactoredRationalFunction& f) {
  return {{"numerator", to_json(f.numerator)}, {"denominator", to_json(f.denominator)}};
}

Polynomial polynomial_from_json(const json& j) { return Polynomial(coefficients_from_json(j)); }

TruncatedSeries series_from_json(const json& j) {
  auto coeffs = coefficients_from_json(j);
  if (coeffs.empty()) throw std::invalid_argument("a series needs at least one coefficient");
  return TruncatedSeries(static_cast<int>(coeffs.size()) - 1, coeffs);
}

FactoredDenominator denominator_from_json(const json& j) { return FactoredDenominator(exponent_map_from_json(j)); }

CyclotomicExponents cyclotomic_from_json(const json& j) { return CyclotomicExponents(exponent_map_from_json(j)); }

FactoredRationalFunction rational_function_from_json(const json& j) {
  return {polynomial_from_json(j.at("numerator")), denominator_from_json(j.at("denominator"))};
}

}  // namespace tracepoincare
