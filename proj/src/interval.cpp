#include "nbasis/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "nbasis/errors.hpp"

namespace nbasis {

// ---- BigFloat ---------------------------------------------------------------

BigFloat::BigFloat(PrecisionBits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, PrecisionBits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, PrecisionBits prec, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const Integer& z, PrecisionBits prec, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, z.get_mpz_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

void BigFloat::set_precision(PrecisionBits prec) { mpfr_prec_round(v_, prec, MPFR_RNDN); }

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(v_)) throw DomainError("non-finite floating value");
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  Rational q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

std::string BigFloat::to_decimal(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
  mpfr_exp_t exp = 0;
  std::unique_ptr<char, void (*)(char*)> s(mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), v_, rnd),
                                           mpfr_free_str);
  std::string m(s.get());
  bool neg = !m.empty() && m[0] == '-';
  if (neg) m.erase(0, 1);
  // value = 0.m * 10^exp
  std::string out = neg ? "-" : "";
  out += m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  long e10 = static_cast<long>(exp) - 1;
  if (e10 != 0) out += "e" + std::to_string(e10);
  return out;
}

BigFloat BigFloat::parse(const std::string& text, PrecisionBits prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.v_, text.c_str(), &end, 10, rnd);
  if (end == text.c_str() || *end != '\0') throw InputError("invalid decimal '" + text + "'");
  return r;
}

namespace {
PrecisionBits joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp2(long e, PrecisionBits prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

// ---- RealInterval -----------------------------------------------------------

RealInterval::RealInterval(PrecisionBits prec) : lo_(prec), hi_(prec) {}

RealInterval::RealInterval(BigFloat lower, BigFloat upper) : lo_(std::move(lower)), hi_(std::move(upper)) {
  if (hi_ < lo_) throw DomainError("interval with lower > upper");
}

RealInterval::RealInterval(const Rational& q, PrecisionBits prec)
    : lo_(q, prec, MPFR_RNDD), hi_(q, prec, MPFR_RNDU) {}

RealInterval::RealInterval(const Integer& z, PrecisionBits prec)
    : lo_(z, prec, MPFR_RNDD), hi_(z, prec, MPFR_RNDU) {}

RealInterval RealInterval::point(const BigFloat& x) { return RealInterval(x, x); }

RealInterval RealInterval::parse(const std::string& lower, const std::string& upper, PrecisionBits prec) {
  return RealInterval(BigFloat::parse(lower, prec, MPFR_RNDD), BigFloat::parse(upper, prec, MPFR_RNDU));
}

bool RealInterval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool RealInterval::contains(const RealInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

bool RealInterval::less_than(const Rational& q) const { return mpfr_cmp_q(hi_.get(), q.get_mpq_t()) < 0; }

bool RealInterval::greater_than(const Rational& q) const { return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) > 0; }

BigFloat RealInterval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

BigFloat RealInterval::midpoint() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

RealInterval RealInterval::operator-() const {
  BigFloat lo(precision()), hi(precision());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

namespace {
PrecisionBits joint(const RealInterval& a, const RealInterval& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  PrecisionBits p = joint(a, b);
  BigFloat lo(p), hi(p);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  PrecisionBits p = joint(a, b);
  BigFloat lo(p), hi(p);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  PrecisionBits p = joint(a, b);
  const BigFloat* xs[2] = {&a.lo_, &a.hi_};
  const BigFloat* ys[2] = {&b.lo_, &b.hi_};
  BigFloat lo(p), hi(p), t(p);
  bool first = true;
  for (const BigFloat* x : xs)
    for (const BigFloat* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) throw PrecisionError("interval division by an interval containing zero");
  PrecisionBits p = joint(a, b);
  const BigFloat* xs[2] = {&a.lo_, &a.hi_};
  const BigFloat* ys[2] = {&b.lo_, &b.hi_};
  BigFloat lo(p), hi(p), t(p);
  bool first = true;
  for (const BigFloat* x : xs)
    for (const BigFloat* y : ys) {
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval abs(const RealInterval& x) {
  if (x.lower().sign() >= 0) return x;
  if (x.upper().sign() <= 0) return -x;
  BigFloat hi(x.precision());
  mpfr_neg(hi.get(), x.lower().get(), MPFR_RNDU);
  if (hi < x.upper()) hi = x.upper();
  return RealInterval(BigFloat(0.0, x.precision()), std::move(hi));
}

RealInterval square(const RealInterval& x) {
  RealInterval a = abs(x);
  BigFloat lo(x.precision()), hi(x.precision());
  mpfr_sqr(lo.get(), a.lower().get(), MPFR_RNDD);
  mpfr_sqr(hi.get(), a.upper().get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval sqrt(const RealInterval& x) {
  if (x.upper().sign() < 0) throw DomainError("square root of a negative interval");
  BigFloat lo(x.precision()), hi(x.precision());
  if (x.lower().sign() > 0) mpfr_sqrt(lo.get(), x.lower().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.upper().get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval root(const RealInterval& x, unsigned long n) {
  if (n == 0) throw DomainError("zeroth root");
  if (x.upper().sign() < 0) throw DomainError("root of a negative interval");
  BigFloat lo(x.precision()), hi(x.precision());
  if (x.lower().sign() > 0) mpfr_rootn_ui(lo.get(), x.lower().get(), n, MPFR_RNDD);
  mpfr_rootn_ui(hi.get(), x.upper().get(), n, MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval pow(const RealInterval& x, unsigned long n) {
  RealInterval result(Integer(1), x.precision()), base = x;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = square(base);
  }
  return result;
}

RealInterval max(const RealInterval& x, long c) {
  BigFloat lo = x.lower(), hi = x.upper();
  if (mpfr_cmp_si(lo.get(), c) < 0) mpfr_set_si(lo.get(), c, MPFR_RNDD);
  if (mpfr_cmp_si(hi.get(), c) < 0) mpfr_set_si(hi.get(), c, MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval hull(const RealInterval& a, const RealInterval& b) {
  return RealInterval(a.lower() < b.lower() ? a.lower() : b.lower(), a.upper() > b.upper() ? a.upper() : b.upper());
}

RealInterval intersect(const RealInterval& a, const RealInterval& b) {
  if (!a.overlaps(b)) throw DomainError("intersection of disjoint intervals");
  return RealInterval(a.lower() > b.lower() ? a.lower() : b.lower(), a.upper() < b.upper() ? a.upper() : b.upper());
}

// ---- ComplexInterval ----------------------------------------------------------

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) { return {a.re + b.re, a.im + b.im}; }

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) { return {a.re - b.re, a.im - b.im}; }

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  if (a.is_real() && b.is_real()) return {a.re * b.re, a.im};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator*(const ComplexInterval& a, const RealInterval& b) { return {a.re * b, a.im * b}; }

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  if (b.is_real()) return {a.re / b.re, a.im / b.re};
  RealInterval n = abs_squared(b);
  ComplexInterval num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
  return {num.re / n, num.im / n};
}

RealInterval abs_squared(const ComplexInterval& z) { return square(z.re) + square(z.im); }

RealInterval abs(const ComplexInterval& z) {
  if (z.is_real()) return abs(z.re);
  return sqrt(abs_squared(z));
}

}  // namespace nbasis
