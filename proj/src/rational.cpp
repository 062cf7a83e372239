#include "nbasis/rational.hpp"

#include <cctype>

#include "nbasis/errors.hpp"

namespace nbasis {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw InputError("invalid integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InputError("invalid integer '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw InputError("invalid rational '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

Integer abs(const Integer& z) { return z < 0 ? Integer(-z) : z; }
Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Squarefree squarefree_status(const Integer& n, unsigned long trial_limit) {
  Integer m = abs(n);
  if (m == 0) return Squarefree::No;
  for (unsigned long p = 2; p <= trial_limit; p += (p == 2 ? 1 : 2)) {
    Integer p2 = Integer(p) * p;
    if (p2 > m) return Squarefree::Yes;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return Squarefree::No;
    }
  }
  if (m == 1) return Squarefree::Yes;
  // m has no prime factor <= trial_limit.
  if (mpz_perfect_square_p(m.get_mpz_t())) return Squarefree::No;
  Integer cube = pow(Integer(trial_limit), 3);
  if (m < cube) return Squarefree::Yes;
  return Squarefree::Unknown;
}

}  // namespace nbasis
