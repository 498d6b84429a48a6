#include "tracepoincare/fixtures.hpp"

#include <json.hpp>

#include "tracepoincare/embedded_fixtures.hpp"
#include "tracepoincare/serialization.hpp"

namespace tracepoincare::fixtures {

namespace {

using nlohmann::json;

const json& numerators() {
  static const json table = json::parse(embedded::reference_numerators);
  return table;
}

const json& proven() {
  static const json table = json::parse(embedded::proven_denominators);
  return table;
}

const json& tabulated() {
  static const json table = json::parse(embedded::tabulated_denominators);
  return table;
}

std::vector<Integer> integers(const json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(Integer(x.get<long>()));
  return out;
}

}  // namespace

std::optional<Polynomial> numerator(const std::string& family, int k) {
  const json& table = numerators();
  if (!table.contains(family)) return std::nullopt;
  const json& rows = table.at(family);
  const std::string key = std::to_string(k);
  if (!rows.contains(key)) return std::nullopt;
  return polynomial_from_json(rows.at(key));
}

std::optional<std::string> numerator_family(const molien::ProblemSpec& spec) {
  if (spec.n == 2) return spec.ring == molien::Ring::Pure ? "pure_n2" : "mixed_n2";
  if (spec.n == 3 && spec.ring == molien::Ring::Pure) return "pure_n3";
  return std::nullopt;
}

std::optional<Integer> pure_n3_value_at_one(int k) {
  const json& values = numerators().at("pure_n3_value_at_one");
  const std::string key = std::to_string(k);
  if (!values.contains(key)) return std::nullopt;
  return Integer(values.at(key).get<long>());
}

std::vector<Integer> catalan_reference() { return integers(numerators().at("catalan")); }

std::vector<std::vector<Integer>> narayana_reference() {
  std::vector<std::vector<Integer>> out;
  const json& rows = numerators().at("narayana_rows");
  for (int m = 1; rows.contains(std::to_string(m)); ++m) out.push_back(integers(rows.at(std::to_string(m))));
  return out;
}

std::vector<DenominatorFixture> proven_denominators(int k) {
  std::vector<DenominatorFixture> out;
  for (const auto& family : proven().at("families")) {
    if (k < family.at("min_k").get<int>()) continue;
    std::map<int, int> exps;
    for (const auto& [i, ab] : family.at("exponents").items()) {
      exps[std::stoi(i)] = ab.at(0).get<int>() * k + ab.at(1).get<int>();
    }
    molien::ProblemSpec spec{family.at("n").get<int>(), k, molien::parse_ring(family.at("ring").get<std::string>())};
    out.push_back({family.at("name").get<std::string>(), "proven", spec, FactoredDenominator(exps)});
  }
  return out;
}

std::vector<DenominatorFixture> tabulated_denominators() {
  std::vector<DenominatorFixture> out;
  for (const char* ring : {"pure", "mixed"}) {
    for (const auto& [n, exps] : tabulated().at(ring).items()) {
      molien::ProblemSpec spec{std::stoi(n), 2, molien::parse_ring(ring)};
      std::string name = std::string(ring) + "_n" + n + "_k2";
      out.push_back({name, "table", spec, denominator_from_json(exps)});
    }
  }
  return out;
}

std::optional<FactoredDenominator> proven_denominator(const molien::ProblemSpec& spec) {
  for (auto& f : proven_denominators(spec.k)) {
    if (f.spec == spec) return f.denominator;
  }
  return std::nullopt;
}

}  // namespace tracepoincare::fixtures
