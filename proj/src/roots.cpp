#include "nbasis/roots.hpp"

#include <algorithm>
#include <cmath>

#include "nbasis/errors.hpp"

namespace nbasis {

namespace {

// Round-to-nearest complex numbers for the Aberth iteration.
struct Cx {
  BigFloat re, im;
  explicit Cx(PrecisionBits p) : re(p), im(p) {}
  Cx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  BigFloat n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
BigFloat norm1(const Cx& a) { return abs(a.re) + abs(a.im); }
bool finite(const Cx& a) { return mpfr_number_p(a.re.get()) && mpfr_number_p(a.im.get()); }

void set_precision(Cx& z, PrecisionBits p) {
  z.re.set_precision(p);
  z.im.set_precision(p);
}

struct Evaluation {
  Cx value, derivative;
};

Evaluation horner(const std::vector<BigFloat>& coeffs, const Cx& z) {
  const PrecisionBits p = z.re.precision();
  Cx v(p), d(p);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    d = d * z + v;
    v = v * z;
    v.re = v.re + coeffs[k];
  }
  return {std::move(v), std::move(d)};
}

std::vector<Cx> initial_guesses(const IntPolynomial& f, double phase) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  // Fujiwara-style radius 2 * max |a_k / a_n|^(1/(n-k)), computed in doubles of
  // the log to survive huge coefficients.
  const double log_lead = std::log(std::abs(mpz_get_d(f.leading().get_mpz_t())));
  double log_r = -50.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& a = f.coefficients()[k];
    if (a == 0) continue;
    long e = 0;
    double m = mpz_get_d_2exp(&e, a.get_mpz_t());
    double la = std::log(std::abs(m)) + static_cast<double>(e) * std::log(2.0);
    log_r = std::max(log_r, (la - log_lead) / static_cast<double>(n - k));
  }
  const double radius = 2.0 * std::exp(std::min(log_r, 600.0));
  std::vector<Cx> z;
  for (std::size_t k = 0; k < n; ++k) {
    double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + phase;
    z.emplace_back(BigFloat(radius * std::cos(t), 64), BigFloat(radius * std::sin(t), 64));
  }
  return z;
}

// Simultaneous Aberth-Ehrlich iteration. Returns false when it produced
// non-finite values.
bool aberth(const IntPolynomial& f, std::vector<Cx>& z, PrecisionBits wp, int max_iterations) {
  std::vector<BigFloat> coeffs;
  for (const Integer& a : f.coefficients()) coeffs.emplace_back(a, wp);
  for (auto& x : z) set_precision(x, wp);
  const BigFloat tolerance = exp2(-static_cast<long>(wp) + 8, wp);
  const BigFloat one(1.0, wp);
  for (int iter = 0; iter < max_iterations; ++iter) {
    BigFloat worst(0.0, wp);
    for (std::size_t i = 0; i < z.size(); ++i) {
      Evaluation e = horner(coeffs, z[i]);
      if (e.value.re.is_zero() && e.value.im.is_zero()) continue;
      Cx newton = e.value / e.derivative;
      Cx sum(wp);
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) sum = sum + Cx(one, BigFloat(0.0, wp)) / (z[i] - z[j]);
      Cx step = newton / (Cx(one, BigFloat(0.0, wp)) - newton * sum);
      if (!finite(step)) step = newton;
      if (!finite(step)) return false;
      z[i] = z[i] - step;
      BigFloat scale = norm1(z[i]);
      if (scale < one) scale = one;
      BigFloat rel = norm1(step) / scale;
      if (rel > worst) worst = rel;
    }
    if (worst <= tolerance) return true;
  }
  return true;
}

enum class CertifyStatus { Ok, TooWide, Failed };

// Weierstrass-correction inclusion: with W_i = f(z_i) / (lc * prod_{j != i}
// (z_i - z_j)), every connected component of the union of the disks
// D(z_i, n |W_i|) holds as many roots as disks. Pairwise disjoint disks thus
// hold exactly one root each. A disk centered on the real axis containing a
// single root of a real polynomial contains a real root.
CertifyStatus certify(const IntPolynomial& f, std::vector<Cx>& z, PrecisionBits wp, PrecisionBits target,
                      std::vector<RootEnclosure>& out) {
  const std::size_t n = z.size();
  // Snap nearly real approximations onto the axis.
  for (auto& x : z) {
    BigFloat scale = norm1(x);
    if (scale < BigFloat(1.0, wp)) scale = BigFloat(1.0, wp);
    if (abs(x.im) <= scale * exp2(-static_cast<long>(wp) / 2, wp)) mpfr_set_zero(x.im.get(), 1);
  }
  // Make conjugate pairs exact mirror images.
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i].im.sign() > 0) pos.push_back(i);
    if (z[i].im.sign() < 0) neg.push_back(i);
  }
  if (pos.size() != neg.size()) return CertifyStatus::Failed;
  std::vector<bool> used(n, false);
  for (std::size_t i : pos) {
    std::size_t best = n;
    BigFloat best_d(wp);
    for (std::size_t j : neg) {
      if (used[j]) continue;
      BigFloat d = norm1(Cx(z[i].re - z[j].re, z[i].im + z[j].im));
      if (best == n || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best == n) return CertifyStatus::Failed;
    used[best] = true;
    z[best] = Cx(z[i].re, -z[i].im);
  }

  std::vector<ComplexInterval> pts;
  for (const auto& x : z)
    pts.emplace_back(RealInterval::point(x.re), RealInterval::point(x.im));
  std::vector<RealInterval> coeffs;
  for (const Integer& a : f.coefficients()) coeffs.emplace_back(a, wp);
  const RealInterval lead(f.leading(), wp);
  const RealInterval degree(Integer(static_cast<long>(n)), wp);

  std::vector<BigFloat> radius;
  for (std::size_t i = 0; i < n; ++i) {
    ComplexInterval value(wp);
    for (std::size_t k = coeffs.size(); k-- > 0;) value = value * pts[i] + ComplexInterval(coeffs[k], RealInterval(wp));
    ComplexInterval denom(lead, RealInterval(wp));
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom = denom * (pts[i] - pts[j]);
    if (denom.re.contains_zero() && denom.im.contains_zero()) return CertifyStatus::Failed;
    RealInterval r = abs(value / denom) * degree;
    radius.push_back(r.upper());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!z[i].im.is_zero()) {
      BigFloat aim = abs(z[i].im);
      if (aim <= radius[i]) return CertifyStatus::Failed;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      RealInterval dist = abs(pts[i] - pts[j]);
      BigFloat sum(wp);
      mpfr_add(sum.get(), radius[i].get(), radius[j].get(), MPFR_RNDU);
      if (dist.lower() <= sum) return CertifyStatus::Failed;
    }
  }
  const BigFloat half_width = exp2(-static_cast<long>(target) - 1, wp);
  bool wide = false;
  for (const auto& r : radius)
    if (r > half_width) wide = true;

  out.clear();
  for (std::size_t i = 0; i < n; ++i) {
    RootEnclosure e{z[i].re, z[i].im, radius[i], z[i].im.is_zero()};
    out.push_back(std::move(e));
  }
  return wide ? CertifyStatus::TooWide : CertifyStatus::Ok;
}

void order_roots(std::vector<RootEnclosure>& roots) {
  std::vector<RootEnclosure> reals, uppers, lowers;
  for (auto& r : roots) {
    if (r.real)
      reals.push_back(std::move(r));
    else if (r.center_im.sign() > 0)
      uppers.push_back(std::move(r));
    else
      lowers.push_back(std::move(r));
  }
  auto by_re = [](const RootEnclosure& a, const RootEnclosure& b) {
    if (a.center_re == b.center_re) return a.center_im < b.center_im;
    return a.center_re < b.center_re;
  };
  std::sort(reals.begin(), reals.end(), by_re);
  std::sort(uppers.begin(), uppers.end(), by_re);
  roots.clear();
  for (auto& r : reals) roots.push_back(std::move(r));
  for (auto& u : uppers) {
    auto it = std::find_if(lowers.begin(), lowers.end(), [&](const RootEnclosure& l) {
      return l.center_re == u.center_re && -l.center_im == u.center_im;
    });
    RootEnclosure conj = std::move(*it);
    lowers.erase(it);
    roots.push_back(std::move(u));
    roots.push_back(std::move(conj));
  }
}

void run_isolation(const IntPolynomial& f, std::vector<Cx>& z, PrecisionBits target, PrecisionBits start_wp,
                   std::vector<RootEnclosure>& out, PrecisionBits& used_wp) {
  const PrecisionBits cap = std::max<PrecisionBits>(64 * target, 1 << 16);
  for (PrecisionBits wp = start_wp; wp <= cap; wp *= 2) {
    if (!aberth(f, z, wp, 200)) throw PrecisionError("root iteration diverged");
    CertifyStatus s = certify(f, z, wp, target, out);
    if (s == CertifyStatus::Ok) {
      used_wp = wp;
      return;
    }
  }
  throw PrecisionError("could not certify root enclosures of " + to_string(f));
}

}  // namespace

ComplexInterval RootEnclosure::box() const {
  const PrecisionBits p = center_re.precision();
  BigFloat lo(p), hi(p);
  mpfr_sub(lo.get(), center_re.get(), radius.get(), MPFR_RNDD);
  mpfr_add(hi.get(), center_re.get(), radius.get(), MPFR_RNDU);
  RealInterval re(std::move(lo), std::move(hi));
  if (real) return ComplexInterval(std::move(re), RealInterval(p));
  BigFloat ilo(p), ihi(p);
  mpfr_sub(ilo.get(), center_im.get(), radius.get(), MPFR_RNDD);
  mpfr_add(ihi.get(), center_im.get(), radius.get(), MPFR_RNDU);
  return ComplexInterval(std::move(re), RealInterval(std::move(ilo), std::move(ihi)));
}

std::vector<std::pair<double, double>> EmbeddingSet::approximations() const {
  std::vector<std::pair<double, double>> r;
  for (const auto& e : roots_) r.emplace_back(e.center_re.to_double(), e.center_im.to_double());
  return r;
}

void EmbeddingSet::refine(PrecisionBits precision) {
  if (precision <= precision_) return;
  std::vector<Cx> z;
  for (const auto& e : roots_) z.emplace_back(e.center_re, e.center_im);
  std::vector<RootEnclosure> out;
  run_isolation(f_, z, precision, std::max<PrecisionBits>(working_, precision + 32), out, working_);
  order_roots(out);
  roots_ = std::move(out);
  precision_ = precision;
}

EmbeddingSet isolate_roots(const IntPolynomial& f, PrecisionBits precision) {
  if (f.is_zero() || f.degree() < 1) throw DomainError("root isolation needs degree >= 1");
  if (f.degree() > 1 && resultant(f, f.derivative()) == 0) throw DomainError("repeated roots");
  EmbeddingSet s;
  s.f_ = f;
  std::vector<RootEnclosure> out;
  for (int attempt = 0;; ++attempt) {
    std::vector<Cx> z = initial_guesses(f, 0.4 + 0.37 * attempt);
    if (!aberth(f, z, 64, 1000)) {
      if (attempt < 4) continue;
      throw PrecisionError("root iteration diverged");
    }
    try {
      run_isolation(f, z, precision, std::max<PrecisionBits>(precision + 32, 96), out, s.working_);
      break;
    } catch (const PrecisionError&) {
      if (attempt >= 4) throw;
    }
  }
  order_roots(out);
  s.roots_ = std::move(out);
  s.precision_ = precision;
  s.real_count_ = static_cast<std::size_t>(
      std::count_if(s.roots_.begin(), s.roots_.end(), [](const RootEnclosure& r) { return r.real; }));
  return s;
}

}  // namespace nbasis
