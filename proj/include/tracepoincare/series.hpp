#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "tracepoincare/polynomial.hpp"
#include "tracepoincare/rational.hpp"

namespace tracepoincare {

/// Power series in t truncated after degree `order`. Arithmetic never reads or
/// writes past that degree; combining two series truncates to the smaller
/// order.
template <class Coeff>
class BasicSeries {
 public:
  BasicSeries() : coeffs_(1) {}
  explicit BasicSeries(int order) : coeffs_(checked_size(order)) {}
  BasicSeries(int order, std::span<const Coeff> head) : coeffs_(checked_size(order)) {
    std::copy_n(head.begin(), std::min(head.size(), coeffs_.size()), coeffs_.begin());
  }

  static BasicSeries one(int order) {
    BasicSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Coeff& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  std::span<const Coeff> coefficients() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c == 0; });
  }

  BasicSeries truncated(int order) const {
    return BasicSeries(std::min(order, this->order()), std::span<const Coeff>(coeffs_));
  }

  BasicSeries& operator+=(const BasicSeries& rhs) {
    shrink_to(rhs.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  BasicSeries& operator-=(const BasicSeries& rhs) {
    shrink_to(rhs.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  BasicSeries& operator*=(const Coeff& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
  friend BasicSeries operator*(BasicSeries a, const Coeff& c) { return a *= c; }

  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    const int order = std::min(a.order(), b.order());
    BasicSeries out(order);
    for (int i = 0; i <= order; ++i) {
      const Coeff& ai = a.coeffs_[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      for (int j = 0; i + j <= order; ++j) {
        out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    return out;
  }
  BasicSeries& operator*=(const BasicSeries& rhs) { return *this = *this * rhs; }

  /// Multiplication by t^s (s >= 0), keeping the order.
  BasicSeries shifted(int s) const {
    BasicSeries out(order());
    for (int i = 0; i + s <= order(); ++i) {
      out.coeffs_[static_cast<std::size_t>(i + s)] = coeffs_[static_cast<std::size_t>(i)];
    }
    return out;
  }

  friend bool operator==(const BasicSeries&, const BasicSeries&) = default;

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return static_cast<std::size_t>(order) + 1;
  }
  void shrink_to(int order) {
    if (order < this->order()) coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  std::vector<Coeff> coeffs_;
};

using TruncatedSeries = BasicSeries<Rational>;
using IntegerSeries = BasicSeries<Integer>;

/// Series of a polynomial, truncated at `order`.
TruncatedSeries series_of(const Polynomial& p, int order);

/// Taylor coefficients 0..order of num/den, by the linear recurrence
/// den_0 c_m = num_m - sum_{j>=1} den_j c_{m-j}. Requires den(0) != 0.
TruncatedSeries series_of(const Polynomial& num, const Polynomial& den, int order);

/// (1 - t^i)^{-e} to the given order.
TruncatedSeries inverse_power_series(int i, int e, int order);

/// Reciprocal of a series with invertible constant term.
TruncatedSeries inverse(const TruncatedSeries& s);

TruncatedSeries to_rational(const IntegerSeries& s);

}  // namespace tracepoincare
