#pragma once

// Subcommands of the trace-poincare tool, kept in the library so they can be
// driven directly from tests.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tracepoincare/molien.hpp"
#include "tracepoincare/verify.hpp"

namespace tracepoincare::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Engine { Molien, Closed, Derivative, ResidueSum };

std::string to_string(Engine e);
Engine parse_engine(const std::string& text);

/// --cache-dir, then $TRACE_POINCARE_CACHE, then $XDG_CACHE_HOME/trace-poincare,
/// then ~/.cache/trace-poincare.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

/// Least denominator used for reconstruction: the proven one when known,
/// otherwise the conjectured one. nullopt when the conjecture has no product form.
std::optional<FactoredDenominator> target_denominator(const molien::ProblemSpec& spec);
CyclotomicExponents target_cyclotomic(const molien::ProblemSpec& spec);

// ---------------------------------------------------------------------------

struct ComputeOptions {
  molien::ProblemSpec spec;
  Engine engine = Engine::Molien;
  std::optional<int> order;
  /// Null disables the cache.
  const molien::SeriesCache* cache = nullptr;
};

struct ComputeResult {
  molien::ProblemSpec spec;
  Engine engine = Engine::Molien;
  int order = 0;
  CyclotomicExponents cyclotomic;
  /// Present when the series was identified as a rational function.
  std::optional<FactoredRationalFunction> function;
  /// Numerator over the expanded cyclotomic product when no (1 - t^i) form exists.
  std::optional<Polynomial> cyclotomic_numerator;
  /// Coefficients 0..min(order, 9).
  TruncatedSeries head;
  std::vector<std::string> warnings;
};

ComputeResult compute(const ComputeOptions& options);
void print(std::ostream& out, const ComputeResult& r);
nlohmann::json to_json(const ComputeResult& r);

// ---------------------------------------------------------------------------

enum class Scope { All, N2, N3, Conjecture, Asymptotics };

std::string to_string(Scope s);
Scope parse_scope(const std::string& text);

struct VerifyOptions {
  Scope scope = Scope::All;
  /// Allowed |ratio - 1| in the asymptotic ratio test.
  double tolerance = 0.01;
  const molien::SeriesCache* cache = nullptr;
};

verify::Report run_verify(const VerifyOptions& options);
/// One line per check plus a summary line.
void print(std::ostream& out, const verify::Report& report);

// ---------------------------------------------------------------------------

struct IntRange {
  int first = 0;
  int last = 0;
};

/// "a..b" or "a".
IntRange parse_range(const std::string& text);

struct ScanOptions {
  IntRange n{2, 3};
  IntRange k{2, 4};
  std::vector<molien::Ring> rings{molien::Ring::Pure};
  /// Largest n for which the constant-term engine is attempted.
  int max_molien_n = 4;
  /// Per-cell budget in seconds.
  double timeout = 600;
  unsigned jobs = 0;
  bool probe_smaller = false;
  std::optional<int> order;
  const molien::SeriesCache* cache = nullptr;
};

struct ScanRow {
  molien::ProblemSpec spec;
  std::string conjectured;
  std::string cyclotomic;
  std::string lcm_reading;
  bool lcm_agrees = false;
  std::string fixture;
  std::string fixture_match;
  /// verified, failed, unverified or timeout.
  std::string reconstruction;
  std::string invariants;
  std::string numerator_degree;
  std::string smaller_probes;
  std::string note;
};

std::vector<ScanRow> run_scan(const ScanOptions& options);
void write_csv(std::ostream& out, const std::vector<ScanRow>& rows);

/// Candidates obtained by lowering one cyclotomic exponent by 1.
std::vector<CyclotomicExponents> smaller_candidates(const CyclotomicExponents& c);

struct ProbeResult {
  CyclotomicExponents candidate;
  bool rejected = false;
  int first_offending_degree = -1;
};

/// Tries reconstruction over every smaller candidate; each should be rejected.
std::vector<ProbeResult> probe_smaller(const TruncatedSeries& series, const CyclotomicExponents& denominator,
                                       const molien::ProblemSpec& spec);

}  // namespace tracepoincare::cli
