#pragma once

// Explicit formulas for the n = 2 Poincare series and the combinatorial
// identities and recurrences that connect them.

#include <string>
#include <vector>

#include "tracepoincare/rational_function.hpp"
#include "tracepoincare/series.hpp"

namespace tracepoincare::closedforms {

/// (-1)^{k-1} / (2 (k-1)! (1-t)^{2k}) * (d/dz)^{k-1} [z^{k-2}(z-1)^2 / (tz-1)^k] at z = t,
/// returned over (1-t)^{2k-2}(1-t^2)^{2k-1}. k >= 2.
FactoredRationalFunction pure_n2_derivative_formula(int k);

/// (1-t)^{-2k} times the sum over a+b+c = k-1, b <= 2, of
/// -(k-2)_a (2)_b k^{(c)} t^{k-2-a+c} (t-1)^{2-b} (1-t^2)^{-k-c} / (2 a! b! c!),
/// collected over (1-t)^{2k-2}(1-t^2)^{2k-1}. k >= 2.
FactoredRationalFunction pure_n2_residue_sum(int k);

/// Lowest-terms series of the pure trace ring, 2 x 2 matrices:
/// [sum C(k-2,i)^2 t^{2i} - sum C(k-2,i) C(k-2,i+1) t^{2i+1}] / ((1-t)^{2k-2}(1-t^2)^{2k-1}).
FactoredRationalFunction pure_n2_closed(int k);

/// Mixed trace ring, 2 x 2 matrices, k >= 3: Narayana numbers in t^2 over
/// (1-t)^{2k}(1-t^2)^{2k-3}.
FactoredRationalFunction mixed_n2_closed(int k);

/// Numerator of the same series written over (1-t)^{2k}(1-t^2)^{2k-1}:
/// sum C(k-1,i)^2 t^{2i} - sum C(k,i+1) C(k-2,i) t^{2i+1}.
Polynomial pure_n2_unreduced_numerator(int k);

/// +1 or -1 when pure_n2_residue_sum(k) = sign * pure_n2_closed(k); 0 if
/// neither holds.
int residue_sum_sign(int k);

// ---------------------------------------------------------------------------
// Identities, checked coefficientwise as truncated series.

enum class Identity {
  /// sum_a C(a+k-1,k-1)^2 t^{2a} = (1-t^2)^{1-2k} sum_a C(k-1,a)^2 t^{2a}
  SquaredBinomialSum,
  /// sum_a C(a+k,k-1) C(a+k-1,k-1) t^{2a+1} = (1-t^2)^{1-2k} t sum_a C(k-2,a) C(k,a+1) t^{2a}
  AdjacentBinomialSum,
  /// C(a+k-1,k-1)^2 - C(a+k,k-1) C(a+k-2,k-1) = C(a+k-1,k-2) C(a+k-1,k-1) / (a+k-1)
  BracketSimplification,
  /// sum_a C(a+k-1,k-2) C(a+k-1,k-1) t^a / (a+k-1) = (1-t)^{3-2k} sum_i C(k-2,i) C(k-2,i+1) t^i / (k-2), k >= 3
  NarayanaSum,
};

std::string to_string(Identity which);

struct ReadingCheck {
  std::string reading;
  bool holds = false;
  /// Lowest degree where the two sides differ, -1 if none.
  int first_mismatch = -1;
};

struct IdentityReport {
  Identity which;
  int k = 0;
  int max_degree = 0;
  /// The first entry is the reading that decides holds(); further entries are
  /// alternative index readings checked for the record.
  std::vector<ReadingCheck> readings;

  bool holds() const { return !readings.empty() && readings.front().holds; }
};

/// Checks the identity for all t-degrees <= max_degree (for the bracket: all
/// a <= max_degree). For AdjacentBinomialSum a second reading is reported:
/// the left side as sum_{a>=1} C(a+k-1,k-1) C(a+k-2,k-2) t^{2a-1}.
IdentityReport verify_identity(Identity which, int k, int max_degree);

// ---------------------------------------------------------------------------
// Recurrences in k.

struct RecurrenceCheck {
  std::string name;
  int k = 0;
  bool holds = false;
  int first_mismatch = -1;
};

/// B(k) = (1-t)^{2k} P_pure(2,k) satisfies
/// (k-1)(1-t^2)^2 B(k) = 2(kt^2 - 2t^2 + k - t - 2) B(k-1) - (k-3) B(k-2),
/// checked as an exact rational-function identity. k >= 4.
struct BRecurrenceReport {
  int k = 0;
  bool holds = false;
  /// Numerator of LHS - RHS over a common denominator; zero iff holds.
  Polynomial residual;
};
BRecurrenceReport check_b_recurrence(int k);

/// Second-order operator recurrences, each verified on both of its sequences
/// to the given order, for every applicable k <= k_max:
///  - "squared": F(k) = sum_a C(a+k-1,k-1)^2 t^a and G(k) = (1-t)^{1-2k} sum_a C(k-1,a)^2 t^a,
///    (kt^2-2kt+t^2+k-2t+1) X(k+2) + (-2kt-2k-t-1) X(k+1) + k X(k) = 0, plus
///    the initial values F(0) = G(0) = 0 and F(1) = G(1) = 1/(1-t);
///  - "narayana": both sides of NarayanaSum,
///    (kt^2-2kt+t^2+k-2t+1) X(k+2) + (-2kt-2k+t+1) X(k+1) + (k-2) X(k) = 0;
///  - "adjacent": both sides of AdjacentBinomialSum against
///    (k^2+k) X(k+2) + (-2k^2t^2-kt^2-2k^2-k) X(k+1) + (k^2t^4-2k^2t^2-t^4+k^2+2t^2-1) X(k) = 0.
///    That relation annihilates (1-t^2)^{2k-1} X(k), not X(k) itself; both are
///    reported, the raw form under the name "adjacent-raw" (expected to fail).
std::vector<RecurrenceCheck> check_operator_recurrences(int k_max, int order = 100);

}  // namespace tracepoincare::closedforms
