#include "tracepoincare/molien.hpp"

namespace tracepoincare::molien {

Reconstruction try_reconstruct(const TruncatedSeries& series, const Polynomial& expanded_denominator,
                               const ProblemSpec& spec, const ReconstructOptions& options) {
  spec.validate();
  const int den_degree = expanded_denominator.degree();
  if (den_degree < 0) throw std::invalid_argument("candidate denominator is zero");
  if (series.order() < den_degree + options.guard_margin) {
    throw std::invalid_argument("series order " + std::to_string(series.order()) + " is below deg(den) + margin = " +
                                std::to_string(den_degree + options.guard_margin));
  }
  const int expected = options.numerator_degree.value_or(den_degree - spec.k * spec.n * spec.n);
  const TruncatedSeries product = series * series_of(expanded_denominator, series.order());

  Reconstruction out;
  out.numerator_degree = expected;
  for (int d = std::max(expected + 1, 0); d <= product.order(); ++d) {
    if (product[d] != 0) {
      out.first_offending_degree = d;
      return out;
    }
  }
  std::vector<Rational> head;
  for (int d = 0; d <= expected; ++d) head.push_back(product[d]);
  out.numerator = Polynomial(std::move(head));
  // A negative expected degree can only succeed for the zero series.
  out.ok = expected >= 0 || product.is_zero();
  if (!out.ok) out.first_offending_degree = 0;
  return out;
}

Reconstruction try_reconstruct(const TruncatedSeries& series, const CyclotomicExponents& denominator,
                               const ProblemSpec& spec, const ReconstructOptions& options) {
  return try_reconstruct(series, denominator.expand(), spec, options);
}

FactoredRationalFunction reconstruct(const TruncatedSeries& series, const FactoredDenominator& denominator,
                                     const ProblemSpec& spec, const ReconstructOptions& options) {
  Reconstruction r = try_reconstruct(series, denominator.expand(), spec, options);
  if (!r.ok) {
    throw ReconstructionFailed("series * " + to_string(denominator) + " has a nonzero coefficient at degree " +
                                   std::to_string(r.first_offending_degree) + " (numerator degree bound " +
                                   std::to_string(r.numerator_degree) + ")",
                               r.first_offending_degree);
  }
  return {std::move(r.numerator), denominator};
}

}  // namespace tracepoincare::molien
