#pragma once

#include <fstream>
#include <json.hpp>
#include <string>

#include "tracepoincare/polynomial.hpp"
#include "tracepoincare/serialization.hpp"

#ifndef TRACEPOINCARE_DATA_DIR
#error "TRACEPOINCARE_DATA_DIR must be defined"
#endif

namespace testdata {

inline nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(TRACEPOINCARE_DATA_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

inline tracepoincare::Polynomial numerator(const std::string& family, int k) {
  static const nlohmann::json table = load("reference_numerators.json");
  return tracepoincare::Polynomial(tracepoincare::coefficients_from_json(table.at(family).at(std::to_string(k))));
}

}  // namespace testdata
