#ifndef NBASIS_RATIONAL_HPP
#define NBASIS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nbasis {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p" or "p/q" in lowest terms.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; throws InputError otherwise. Result is canonical.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);
Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);
Integer abs(const Integer& z);
Rational abs(const Rational& q);

/// Least common multiple of all denominators.
template <class Range>
Integer common_denominator(const Range& values) {
  Integer l = 1;
  for (const Rational& q : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

/// Squarefreeness by trial division up to `trial_limit`, then a perfect-square
/// test on the cofactor. `Unknown` when a composite cofactor above the limit
/// could hide a square factor.
enum class Squarefree { Yes, No, Unknown };
Squarefree squarefree_status(const Integer& n, unsigned long trial_limit = 1000000);

}  // namespace nbasis

#endif
