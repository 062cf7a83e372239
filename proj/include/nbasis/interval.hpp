#ifndef NBASIS_INTERVAL_HPP
#define NBASIS_INTERVAL_HPP

#include <mpfr.h>

#include <string>

#include "nbasis/rational.hpp"

namespace nbasis {

using PrecisionBits = mpfr_prec_t;

inline constexpr PrecisionBits kDefaultPrecision = 128;
inline constexpr PrecisionBits kMaxPrecision = 4096;

/// Owning wrapper around an mpfr_t. Arithmetic operators round to nearest and
/// are meant for approximation work only; certified work goes through
/// RealInterval.
class BigFloat {
 public:
  explicit BigFloat(PrecisionBits prec = kDefaultPrecision);
  BigFloat(double v, PrecisionBits prec);
  BigFloat(const Rational& q, PrecisionBits prec, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const Integer& z, PrecisionBits prec, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  PrecisionBits precision() const noexcept { return mpfr_get_prec(v_); }
  /// Rounds the stored value to a new precision.
  void set_precision(PrecisionBits prec);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Exact conversion (the value is a dyadic rational).
  Rational to_rational() const;
  /// Scientific decimal string with `digits` significant digits, rounded in direction rnd.
  std::string to_decimal(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;
  /// Parses a decimal string with directed rounding.
  static BigFloat parse(const std::string& text, PrecisionBits prec, mpfr_rnd_t rnd);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
/// 2^e at the given precision (exact).
BigFloat exp2(long e, PrecisionBits prec);

/// Closed real interval [lower, upper] with outward-rounded arithmetic.
class RealInterval {
 public:
  explicit RealInterval(PrecisionBits prec = kDefaultPrecision);
  RealInterval(BigFloat lower, BigFloat upper);
  /// Tightest enclosure of q at the given precision.
  RealInterval(const Rational& q, PrecisionBits prec);
  RealInterval(const Integer& z, PrecisionBits prec);
  static RealInterval point(const BigFloat& x);
  /// Parses decimal endpoint strings, rounding outward.
  static RealInterval parse(const std::string& lower, const std::string& upper, PrecisionBits prec);

  const BigFloat& lower() const noexcept { return lo_; }
  const BigFloat& upper() const noexcept { return hi_; }
  PrecisionBits precision() const noexcept { return lo_.precision(); }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& q) const;
  bool contains(const RealInterval& o) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool overlaps(const RealInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  /// Certainly below / above.
  bool less_than(const RealInterval& o) const { return hi_ < o.lo_; }
  bool less_than(const Rational& q) const;
  bool greater_than(const Rational& q) const;
  /// upper - lower, rounded up.
  BigFloat width() const;
  BigFloat midpoint() const;
  double to_double() const { return midpoint().to_double(); }

  RealInterval operator-() const;
  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  /// Throws PrecisionError when the divisor contains zero.
  friend RealInterval operator/(const RealInterval& a, const RealInterval& b);

 private:
  BigFloat lo_, hi_;
};

RealInterval abs(const RealInterval& x);
RealInterval square(const RealInterval& x);
RealInterval sqrt(const RealInterval& x);
/// Real n-th root of a nonnegative interval.
RealInterval root(const RealInterval& x, unsigned long n);
RealInterval pow(const RealInterval& x, unsigned long n);
/// max(c, x) elementwise on the endpoints.
RealInterval max(const RealInterval& x, long c);
RealInterval hull(const RealInterval& a, const RealInterval& b);
RealInterval intersect(const RealInterval& a, const RealInterval& b);

/// Rectangular complex interval.
struct ComplexInterval {
  RealInterval re;
  RealInterval im;

  explicit ComplexInterval(PrecisionBits prec = kDefaultPrecision) : re(prec), im(prec) {}
  ComplexInterval(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im.is_point() && im.lower().is_zero(); }
  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const RealInterval& b);
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
};

RealInterval abs(const ComplexInterval& z);
RealInterval abs_squared(const ComplexInterval& z);

}  // namespace nbasis

#endif
