#pragma once

#include <string>

#include "tracepoincare/denominator.hpp"
#include "tracepoincare/polynomial.hpp"
#include "tracepoincare/series.hpp"

namespace tracepoincare {

/// numerator / prod (1 - t^i)^{e_i}. Not necessarily in lowest terms; see
/// verify::leastness_certificate for that property.
struct FactoredRationalFunction {
  Polynomial numerator;
  FactoredDenominator denominator;

  /// Same function written over `target`; throws NotDivisible when the
  /// numerator cannot absorb the change of denominator exactly.
  FactoredRationalFunction rebased(const FactoredDenominator& target) const;

  friend bool operator==(const FactoredRationalFunction&, const FactoredRationalFunction&) = default;
};

/// Exact equality as functions (cross-multiplication), independent of the
/// chosen denominators.
bool same_function(const FactoredRationalFunction& a, const FactoredRationalFunction& b);

FactoredRationalFunction operator+(const FactoredRationalFunction& a, const FactoredRationalFunction& b);
FactoredRationalFunction operator-(const FactoredRationalFunction& a, const FactoredRationalFunction& b);
FactoredRationalFunction operator*(const Polynomial& p, const FactoredRationalFunction& f);
/// f / extra, by adding exponents.
FactoredRationalFunction divided_by(const FactoredRationalFunction& f, const FactoredDenominator& extra);

TruncatedSeries series_of(const FactoredRationalFunction& f, int order);

/// Coefficient of t^m, from the expanded-denominator recurrence; memory is
/// O(deg den) regardless of m.
Rational coefficient_at(const FactoredRationalFunction& f, long m);

std::string to_string(const FactoredRationalFunction& f);

}  // namespace tracepoincare
