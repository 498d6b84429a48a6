#pragma once

// Constant-term evaluation of the one-variable Molien-Weyl integrals for the
// pure (C) and mixed (R) trace rings of k generic n x n matrices, and
// reconstruction of the resulting series over a candidate denominator.

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tracepoincare/denominator.hpp"
#include "tracepoincare/rational_function.hpp"
#include "tracepoincare/series.hpp"

namespace tracepoincare::molien {

enum class Ring { Pure, Mixed };

std::string to_string(Ring ring);
/// "pure" or "mixed"
Ring parse_ring(std::string_view text);

struct ProblemSpec {
  int n = 2;
  int k = 2;
  Ring ring = Ring::Pure;

  /// Throws std::invalid_argument unless n >= 1 and k >= 2.
  void validate() const;
  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Exponents of z_1..z_{n-1}; the remaining variable is normalized to 1.
using Exponent = std::vector<int>;

/// Sparse Laurent polynomial in the z variables with integer series
/// coefficients in t, all truncated at the same order. Zero series are never
/// stored.
class LaurentTable {
 public:
  LaurentTable(int dimensions, int order);
  static LaurentTable unit(int dimensions, int order);

  int dimensions() const { return dims_; }
  int order() const { return order_; }
  std::size_t size() const { return terms_.size(); }
  const std::map<Exponent, IntegerSeries>& terms() const { return terms_; }

  /// Coefficient series of z^e, or nullptr when absent.
  const IntegerSeries* find(const Exponent& e) const;
  void add(const Exponent& e, const IntegerSeries& s);
  /// Mutable slot for z^e, inserting a zero series; call drop_zero_terms()
  /// after filling slots to restore the no-zero-series invariant.
  IntegerSeries& slot(const Exponent& e);
  void drop_zero_terms();

 private:
  int dims_;
  int order_;
  std::map<Exponent, IntegerSeries> terms_;
};

/// Truncation of (1 - t z^v)^{-k}: sum_{a=0}^{order} C(a+k-1, k-1) t^a z^{a v}.
LaurentTable expand_geometric_factor(const Exponent& v, int k, int order);

class TimeBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MolienOptions {
  /// Drop terms whose z-exponent can no longer return to the constant term
  /// within the remaining t-budget. Disabling it keeps only t-truncation.
  bool prune = true;
  /// Index in [0, n) of the variable set to 1; -1 selects n-1.
  int normalized_variable = -1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// First order+1 coefficients of the Poincare series, as
/// (1/n!) CT_z[ num(z) prod_{i != j} (1 - t z_i/z_j)^{-k} ] (1 - t)^{-nk}
/// with num = prod_{i != j}(1 - z_i/z_j), times sum_{i,j} z_i/z_j for Mixed.
TruncatedSeries molien_series(const ProblemSpec& spec, int order, const MolienOptions& options = {});

/// Same series for n = 2 through a single-variable constant term: pairs the
/// two binomial series directly instead of folding a table.
TruncatedSeries molien_series_n2(int k, Ring ring, int order);

/// Laurent numerator of the integrand for the chosen normalization.
std::map<Exponent, Integer> integrand_numerator(const ProblemSpec& spec, int normalized_variable);

// ---------------------------------------------------------------------------
// Reconstruction

struct ReconstructOptions {
  /// Extra coefficients required beyond deg(den).
  int guard_margin = 5;
  /// Overrides the functional-equation degree deg(den) - k n^2.
  std::optional<int> numerator_degree;
};

class ReconstructionFailed : public std::runtime_error {
 public:
  ReconstructionFailed(const std::string& what, int first_offending_degree)
      : std::runtime_error(what), first_offending_degree_(first_offending_degree) {}
  int first_offending_degree() const { return first_offending_degree_; }

 private:
  int first_offending_degree_;
};

struct Reconstruction {
  bool ok = false;
  Polynomial numerator;
  int numerator_degree = 0;
  /// First degree above numerator_degree with a nonzero product coefficient.
  int first_offending_degree = -1;
};

/// Multiplies the series by the expanded candidate denominator and checks that
/// every coefficient above the expected numerator degree vanishes.
/// Throws std::invalid_argument if series.order() < deg(den) + guard_margin.
Reconstruction try_reconstruct(const TruncatedSeries& series, const Polynomial& expanded_denominator,
                               const ProblemSpec& spec, const ReconstructOptions& options = {});
Reconstruction try_reconstruct(const TruncatedSeries& series, const CyclotomicExponents& denominator,
                               const ProblemSpec& spec, const ReconstructOptions& options = {});

/// Throws ReconstructionFailed on a nonzero tail.
FactoredRationalFunction reconstruct(const TruncatedSeries& series, const FactoredDenominator& denominator,
                                     const ProblemSpec& spec, const ReconstructOptions& options = {});

// ---------------------------------------------------------------------------
// On-disk cache

/// Bumped whenever the engine could produce different coefficients.
inline constexpr std::string_view kEngineVersion = "molien-fold-2";

/// JSON files keyed by (n, k, ring, order); entries written by another engine
/// version are treated as misses and overwritten.
class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path dir);

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path entry_path(const ProblemSpec& spec, int order) const;
  std::optional<TruncatedSeries> load(const ProblemSpec& spec, int order) const;
  void store(const ProblemSpec& spec, int order, const TruncatedSeries& series) const;

 private:
  std::filesystem::path dir_;
};

/// molien_series with a cache lookup first; cache may be null.
TruncatedSeries cached_molien_series(const ProblemSpec& spec, int order, const SeriesCache* cache,
                                     const MolienOptions& options = {});

}  // namespace tracepoincare::molien
