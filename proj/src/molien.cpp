#include "tracepoincare/molien.hpp"

#include <algorithm>
#include <numeric>

namespace tracepoincare::molien {

std::string to_string(Ring ring) { return ring == Ring::Pure ? "pure" : "mixed"; }

Ring parse_ring(std::string_view text) {
  if (text == "pure") return Ring::Pure;
  if (text == "mixed") return Ring::Mixed;
  throw std::invalid_argument("ring must be 'pure' or 'mixed', got '" + std::string(text) + "'");
}

void ProblemSpec::validate() const {
  if (n < 1) throw std::invalid_argument("matrix size n must be >= 1");
  if (k < 2) throw std::invalid_argument("number of matrices k must be >= 2");
}

LaurentTable::LaurentTable(int dimensions, int order) : dims_(dimensions), order_(order) {
  if (dimensions < 0 || order < 0) throw std::invalid_argument("bad Laurent table shape");
}

LaurentTable LaurentTable::unit(int dimensions, int order) {
  LaurentTable t(dimensions, order);
  t.terms_.emplace(Exponent(static_cast<std::size_t>(dimensions), 0), IntegerSeries::one(order));
  return t;
}

const IntegerSeries* LaurentTable::find(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? nullptr : &it->second;
}

void LaurentTable::add(const Exponent& e, const IntegerSeries& s) {
  if (static_cast<int>(e.size()) != dims_) throw std::invalid_argument("exponent has wrong dimension");
  slot(e) += s.truncated(order_);
  auto it = terms_.find(e);
  if (it->second.is_zero()) terms_.erase(it);
}

IntegerSeries& LaurentTable::slot(const Exponent& e) {
  auto it = terms_.find(e);
  if (it == terms_.end()) it = terms_.emplace(e, IntegerSeries(order_)).first;
  return it->second;
}

void LaurentTable::drop_zero_terms() { std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); }); }

LaurentTable expand_geometric_factor(const Exponent& v, int k, int order) {
  if (k < 0) throw std::invalid_argument("multiplicity must be >= 0");
  LaurentTable table(static_cast<int>(v.size()), order);
  for (int a = 0; a <= order; ++a) {
    Integer c = k == 0 ? Integer(a == 0 ? 1 : 0) : binomial(a + k - 1, k - 1);
    if (c == 0) continue;
    Exponent e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) e[i] = a * v[i];
    table.slot(e)[a] += c;
  }
  table.drop_zero_terms();
  return table;
}

namespace {

using LaurentPolynomial = std::map<Exponent, Integer>;

/// z_i / z_j as an exponent vector with component `skip` removed.
Exponent ratio_exponent(int n, int i, int j, int skip) {
  Exponent e;
  e.reserve(static_cast<std::size_t>(n - 1));
  for (int c = 0; c < n; ++c) {
    if (c == skip) continue;
    e.push_back((c == i ? 1 : 0) - (c == j ? 1 : 0));
  }
  return e;
}

Exponent plus(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[plus(ea, eb)] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

int normalized_index(const ProblemSpec& spec, int requested) {
  int p = requested < 0 ? spec.n - 1 : requested;
  if (p >= spec.n) throw std::invalid_argument("normalized variable index out of range");
  return p;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Tells, for an exponent reached at some t-degree, the largest degree from
/// which the still-unfolded factors can bring it back to a numerator
/// monomial's negative.
class Reachability {
 public:
  Reachability(const LaurentPolynomial& numerator, int dims, int order)
      : order_(order), num_max_(static_cast<std::size_t>(dims)), num_min_(static_cast<std::size_t>(dims)),
        up_(static_cast<std::size_t>(dims)), down_(static_cast<std::size_t>(dims)) {
    bool first = true;
    for (const auto& [e, c] : numerator) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        num_max_[i] = first ? e[i] : std::max(num_max_[i], e[i]);
        num_min_[i] = first ? e[i] : std::min(num_min_[i], e[i]);
      }
      first = false;
    }
  }

  void set_remaining(const std::vector<Exponent>& remaining) {
    std::fill(up_.begin(), up_.end(), 0);
    std::fill(down_.begin(), down_.end(), 0);
    for (const auto& v : remaining) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        up_[i] = std::max(up_[i], v[i]);
        down_[i] = std::max(down_[i], -v[i]);
      }
    }
  }

  /// -1 when unreachable at every degree.
  int max_degree(const Exponent& w) const {
    int best = order_;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int low_gap = -num_max_[i] - w[i];  // must climb this far
      if (low_gap > 0) {
        if (up_[i] == 0) return -1;
        best = std::min(best, order_ - ceil_div(low_gap, up_[i]));
      }
      const int high_gap = w[i] + num_min_[i];  // must descend this far
      if (high_gap > 0) {
        if (down_[i] == 0) return -1;
        best = std::min(best, order_ - ceil_div(high_gap, down_[i]));
      }
    }
    return best;
  }

 private:
  int order_;
  std::vector<int> num_max_, num_min_, up_, down_;
};

void check_deadline(const MolienOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
    throw TimeBudgetExceeded("molien series exceeded its time budget");
  }
}

int lowest_nonzero(const IntegerSeries& s) {
  for (int i = 0; i <= s.order(); ++i) {
    if (s[i] != 0) return i;
  }
  return s.order() + 1;
}

}  // namespace

LaurentPolynomial integrand_numerator(const ProblemSpec& spec, int normalized_variable) {
  spec.validate();
  const int n = spec.n;
  const int p = normalized_index(spec, normalized_variable);
  const Exponent zero(static_cast<std::size_t>(n - 1), 0);
  LaurentPolynomial num{{zero, 1}};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      LaurentPolynomial factor{{zero, 1}};
      factor[ratio_exponent(n, i, j, p)] -= 1;
      num = multiply(num, factor);
    }
  }
  if (spec.ring == Ring::Mixed) {
    LaurentPolynomial traces;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) traces[ratio_exponent(n, i, j, p)] += 1;
    }
    num = multiply(num, traces);
  }
  return num;
}

TruncatedSeries molien_series(const ProblemSpec& spec, int order, const MolienOptions& options) {
  spec.validate();
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  const int n = spec.n;
  const int dims = n - 1;
  const int p = normalized_index(spec, options.normalized_variable);
  const LaurentPolynomial numerator = integrand_numerator(spec, p);

  std::vector<Exponent> factors;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) factors.push_back(ratio_exponent(n, i, j, p));
    }
  }
  // Factors in increasing spread.
  auto spread = [](const Exponent& v) {
    return std::accumulate(v.begin(), v.end(), 0, [](int acc, int x) { return acc + std::abs(x); });
  };
  std::stable_sort(factors.begin(), factors.end(),
                   [&](const Exponent& a, const Exponent& b) { return spread(a) < spread(b); });

  std::vector<Integer> weights(static_cast<std::size_t>(order) + 1);
  for (int a = 0; a <= order; ++a) weights[static_cast<std::size_t>(a)] = binomial(a + spec.k - 1, spec.k - 1);

  Reachability reach(numerator, dims, order);
  LaurentTable table = LaurentTable::unit(dims, order);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const Exponent& v = factors[f];
    reach.set_remaining(std::vector<Exponent>(factors.begin() + static_cast<long>(f) + 1, factors.end()));
    LaurentTable next(dims, order);
    for (const auto& [w, s] : table.terms()) {
      check_deadline(options);
      const int low = lowest_nonzero(s);
      Exponent target = w;
      for (int a = 0; a + low <= order; ++a) {
        if (a > 0) {
          for (std::size_t i = 0; i < target.size(); ++i) target[i] += v[i];
        }
        const int cap = options.prune ? reach.max_degree(target) : order;
        if (cap < a + low) continue;
        IntegerSeries& dst = next.slot(target);
        const mpz_srcptr weight = weights[static_cast<std::size_t>(a)].get_mpz_t();
        for (int e = low; e + a <= cap; ++e) {
          const Integer& src = s[e];
          if (src == 0) continue;
          mpz_addmul(dst[e + a].get_mpz_t(), weight, src.get_mpz_t());
        }
      }
    }
    next.drop_zero_terms();
    table = std::move(next);
  }

  // Constant term of numerator * table.
  IntegerSeries ct(order);
  for (const auto& [m, coeff] : numerator) {
    Exponent neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
    if (const IntegerSeries* s = table.find(neg)) {
      for (int e = 0; e <= order; ++e) mpz_addmul(ct[e].get_mpz_t(), coeff.get_mpz_t(), (*s)[e].get_mpz_t());
    }
  }

  // Diagonal factors (1 - t z_i/z_i)^{-k} contribute the scalar (1 - t)^{-nk}.
  IntegerSeries diagonal(order);
  for (int a = 0; a <= order; ++a) diagonal[a] = binomial(a + n * spec.k - 1, n * spec.k - 1);
  ct *= diagonal;

  const Integer symmetry = factorial(static_cast<unsigned long>(n));
  TruncatedSeries out(order);
  for (int e = 0; e <= order; ++e) {
    if (!mpz_divisible_p(ct[e].get_mpz_t(), symmetry.get_mpz_t())) {
      throw std::logic_error("constant term not divisible by n!; engine invariant broken");
    }
    out[e] = Rational(ct[e] / symmetry);
  }
  return out;
}

TruncatedSeries molien_series_n2(int k, Ring ring, int order) {
  ProblemSpec{2, k, ring}.validate();
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  // CT_z of nu(z) sum_a c_a t^a z^a sum_b c_b t^b z^{-b}: a term nu_j z^j pairs
  // a with b = a + j.
  const std::map<int, long> nu = ring == Ring::Pure ? std::map<int, long>{{-1, -1}, {0, 2}, {1, -1}}
                                                    : std::map<int, long>{{-2, -1}, {0, 2}, {2, -1}};
  auto c = [k](int a) { return binomial(a + k - 1, k - 1); };
  IntegerSeries ct(order);
  for (const auto& [j, weight] : nu) {
    for (int a = 0; a <= order; ++a) {
      const int b = a + j;
      if (b < 0) continue;
      if (a + b > order) break;
      ct[a + b] += weight * c(a) * c(b);
    }
  }
  IntegerSeries diagonal(order);
  for (int a = 0; a <= order; ++a) diagonal[a] = binomial(a + 2 * k - 1, 2 * k - 1);
  ct *= diagonal;
  TruncatedSeries out(order);
  for (int e = 0; e <= order; ++e) out[e] = Rational(Integer(ct[e] / 2));
  return out;
}

}  // namespace tracepoincare::molien
