#pragma once

// Exact integer and rational scalars. Everything in the library is built on
// GMP's mpz/mpq; an mpq_class produced by arithmetic is always canonical
// (lowest terms, positive denominator, zero stored as 0/1).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tracepoincare {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Always "num/den", including "0/1" and "5/1".
std::string to_fraction_string(const Rational& q);

/// Accepts "num/den" or a bare integer; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// C(n, r), zero unless 0 <= r <= n.
Integer binomial(long n, long r);
Integer factorial(unsigned long n);
/// (n)_a = n (n-1) ... (n-a+1)
Integer falling_factorial(long n, unsigned long a);
/// n^(a) = n (n+1) ... (n+a-1)
Integer rising_factorial(long n, unsigned long a);

/// C_m = C(2m, m) / (m+1)
Integer catalan(unsigned long m);

}  // namespace tracepoincare
