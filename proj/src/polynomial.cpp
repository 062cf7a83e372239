#include "nbasis/polynomial.hpp"

#include <sstream>

namespace nbasis {

IntPolynomial make_int_polynomial(std::initializer_list<long> coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const Integer& a : f.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  Integer g = content(f);
  if (f.leading() < 0) g = -g;
  std::vector<Integer> c = f.coefficients();
  for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

Integer max_abs_coefficient(const IntPolynomial& f) {
  Integer m = 0;
  for (const Integer& a : f.coefficients())
    if (abs(a) > m) m = abs(a);
  return m;
}

IntPolynomial primitive_integer_multiple(const RatPolynomial& f) {
  Integer l = common_denominator(f.coefficients());
  std::vector<Integer> c;
  c.reserve(f.size());
  for (const Rational& q : f.coefficients()) c.emplace_back(Integer(q * l));
  return primitive_part(IntPolynomial(std::move(c)));
}

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
  return RatPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<Rational> r = a.coefficients();
  std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
  const int db = b.degree();
  const Rational& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational factor = r[k] / lb;
    q[k - db] = factor;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= factor * b.coefficients()[i];
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

namespace {
RatPolynomial make_monic(RatPolynomial p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}
}  // namespace

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(std::move(x));
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPolynomial s2 = s0 - q * s1;
    RatPolynomial t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  const Integer& lb = b.leading();
  int e = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    Integer lead = r[k];
    for (auto& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= lead * b.coefficients()[i];
    --e;
  }
  IntPolynomial rem{std::vector<Integer>(r.begin(), r.begin() + db)};
  if (e > 0) rem *= pow(lb, static_cast<unsigned long>(e));
  return rem;
}

IntPolynomial divexact(const IntPolynomial& p, const Integer& d) {
  std::vector<Integer> c = p.coefficients();
  for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return IntPolynomial(std::move(c));
}

}  // namespace

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  IntPolynomial a = f, b = g;
  Integer ca = content(a), cb = content(b);
  a = divexact(a, ca);
  b = divexact(b, cb);
  Integer t = pow(ca, b.degree()) * pow(cb, a.degree());
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
  }
  if (b.degree() == 0) return s * t * pow(b.leading(), a.degree());
  Integer gg = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = divexact(r, gg * pow(h, delta));
    gg = a.leading();
    // h <- g^delta / h^(delta - 1)
    Integer num = pow(gg, delta), den = pow(h, delta - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (b.is_zero()) return 0;
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  Integer num = pow(b.leading(), da), den = pow(h, da - 1);
  Integer hh;
  mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * hh;
}

ResultantAndDiscriminant resultant_and_discriminant(const IntPolynomial& f) {
  if (f.is_zero()) throw DomainError("discriminant of the zero polynomial");
  if (f.degree() < 1) throw DomainError("discriminant needs degree >= 1");
  const long d = f.degree();
  Integer res = resultant(f, f.derivative());
  Rational disc(res, f.leading());
  disc.canonicalize();
  if (((d * (d - 1)) / 2) & 1) disc = -disc;
  return {res, disc};
}

Integer discriminant(const IntPolynomial& f) {
  Rational d = resultant_and_discriminant(f).discriminant;
  if (d.get_den() != 1) throw DomainError("non-integral discriminant");
  return d.get_num();
}

std::string to_string(const IntPolynomial& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < f.size(); ++k) os << (k ? ", " : "") << f.coefficients()[k].get_str();
  os << ']';
  return os.str();
}

std::string to_pretty_string(const IntPolynomial& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    const Integer& a = f.coefficients()[k];
    if (a == 0) continue;
    Integer m = abs(a);
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || m != 1) os << m.get_str() << (k ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace nbasis
