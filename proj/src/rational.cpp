#include "tracepoincare/rational.hpp"

#include <stdexcept>

namespace tracepoincare {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer falling_factorial(long n, unsigned long a) {
  Integer out = 1;
  for (unsigned long i = 0; i < a; ++i) out *= n - static_cast<long>(i);
  return out;
}

Integer rising_factorial(long n, unsigned long a) {
  Integer out = 1;
  for (unsigned long i = 0; i < a; ++i) out *= n + static_cast<long>(i);
  return out;
}

Integer catalan(unsigned long m) {
  Integer c = binomial(static_cast<long>(2 * m), static_cast<long>(m));
  return c / (m + 1);
}

}  // namespace tracepoincare
