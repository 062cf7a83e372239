#ifndef NBASIS_POLYNOMIAL_HPP
#define NBASIS_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nbasis/errors.hpp"
#include "nbasis/rational.hpp"

namespace nbasis {

/// Dense univariate polynomial, coefficient of x^k stored at index k.
/// The zero polynomial has no stored coefficients and degree -1.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Coeff& a) { return Polynomial(std::vector<Coeff>{a}); }
  static Polynomial monomial(const Coeff& a, std::size_t k) {
    std::vector<Coeff> c(k + 1, Coeff(0));
    c[k] = a;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(Coeff(1), 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }

  Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
  const Coeff& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return Polynomial(std::move(d));
  }

  /// Horner evaluation in any ring that accepts Coeff on the right.
  template <class T>
  T evaluate(const T& x, T zero) const {
    T acc = std::move(zero);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }
  Coeff evaluate(const Coeff& x) const { return evaluate<Coeff>(x, Coeff(0)); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned long e) const {
    Polynomial result = constant(Coeff(1)), base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

IntPolynomial make_int_polynomial(std::initializer_list<long> coeffs);

Integer content(const IntPolynomial& f);
/// f / content(f), with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& f);
/// |f| = max |a_k|.
Integer max_abs_coefficient(const IntPolynomial& f);
/// Clears denominators and returns the primitive part (positive leading coefficient).
IntPolynomial primitive_integer_multiple(const RatPolynomial& f);
RatPolynomial to_rational(const IntPolynomial& f);

/// Euclidean division over Q. Throws DomainError on division by zero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
/// Monic gcd over Q (zero if both are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

struct ExtendedGcd {
  RatPolynomial gcd;  // monic
  RatPolynomial s;    // s*a + t*b = gcd
  RatPolynomial t;
};
ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Resultant over Z by the subresultant pseudo-remainder sequence.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

struct ResultantAndDiscriminant {
  Integer resultant;      // Res(f, f')
  Rational discriminant;  // (-1)^{d(d-1)/2} Res(f, f') / lc(f)
};
/// Throws DomainError for the zero polynomial or degree < 1.
ResultantAndDiscriminant resultant_and_discriminant(const IntPolynomial& f);
Integer discriminant(const IntPolynomial& f);

/// Constant term first, e.g. "[-1, -2, 1, 1]".
std::string to_string(const IntPolynomial& f);
/// Human-readable, highest degree first, e.g. "x^3 + x^2 - 2*x - 1".
std::string to_pretty_string(const IntPolynomial& f, const std::string& var = "x");

}  // namespace nbasis

#endif
