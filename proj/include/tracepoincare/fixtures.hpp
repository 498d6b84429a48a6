#pragma once

// Reference tables compiled into the library: tabulated numerators for small
// (n, k), the proven denominator families, and the k = 2 least denominators
// for n = 4, 5, 6.

#include <optional>
#include <string>
#include <vector>

#include "tracepoincare/denominator.hpp"
#include "tracepoincare/molien.hpp"
#include "tracepoincare/polynomial.hpp"

namespace tracepoincare::fixtures {

/// Tabulated numerator, lowest degree first, or nullopt outside the table.
/// family is one of "pure_n2", "mixed_n2", "pure_n3".
std::optional<Polynomial> numerator(const std::string& family, int k);

/// Numerator family name for a problem, or nullopt when none is tabulated.
std::optional<std::string> numerator_family(const molien::ProblemSpec& spec);

/// N_k(1) for the n = 3 pure numerators, k = 2..4.
std::optional<Integer> pure_n3_value_at_one(int k);

std::vector<Integer> catalan_reference();
/// narayana_reference()[m - 1] lists (1/m) C(m,i) C(m,i+1), i = 0..m-1.
std::vector<std::vector<Integer>> narayana_reference();

struct DenominatorFixture {
  std::string name;
  /// "proven" for the families valid for every k, "table" for the k = 2 list.
  std::string source;
  molien::ProblemSpec spec;
  FactoredDenominator denominator;
};

/// The four n in {2, 3} families evaluated at k (k >= their minimum).
std::vector<DenominatorFixture> proven_denominators(int k);
/// The six k = 2 denominators for n = 4, 5, 6, both rings.
std::vector<DenominatorFixture> tabulated_denominators();
/// Proven family covering the problem, if any.
std::optional<FactoredDenominator> proven_denominator(const molien::ProblemSpec& spec);

}  // namespace tracepoincare::fixtures
