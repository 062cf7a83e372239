#ifndef NBASIS_ROOTS_HPP
#define NBASIS_ROOTS_HPP

#include <cstddef>
#include <vector>

#include "nbasis/interval.hpp"
#include "nbasis/polynomial.hpp"

namespace nbasis {

/// One certified root: the disk |z - center| <= radius holds exactly one root
/// of the polynomial. Real roots have a center on the real axis.
struct RootEnclosure {
  BigFloat center_re;
  BigFloat center_im;
  BigFloat radius;
  bool real = false;

  /// Axis-parallel box around the disk (the imaginary part is exactly zero
  /// for real roots).
  ComplexInterval box() const;
};

/// Certified enclosures of all complex roots of a squarefree integer
/// polynomial. Order: real roots ascending, then conjugate pairs by
/// ascending real part with the positive-imaginary member first.
///
/// Refinement mutates the object; share copies between threads, not
/// references.
class EmbeddingSet {
 public:
  const IntPolynomial& polynomial() const noexcept { return f_; }
  std::size_t size() const noexcept { return roots_.size(); }
  PrecisionBits precision() const noexcept { return precision_; }
  const RootEnclosure& enclosure(std::size_t i) const { return roots_.at(i); }
  ComplexInterval root(std::size_t i) const { return roots_.at(i).box(); }
  std::size_t real_root_count() const noexcept { return real_count_; }
  bool totally_real() const noexcept { return real_count_ == roots_.size(); }
  /// Midpoint approximations (re, im) in double precision, for diagnostics.
  std::vector<std::pair<double, double>> approximations() const;

  /// Shrinks every enclosure below 2^-precision, reusing current centers.
  void refine(PrecisionBits precision);

 private:
  friend EmbeddingSet isolate_roots(const IntPolynomial& f, PrecisionBits precision);
  IntPolynomial f_;
  std::vector<RootEnclosure> roots_;
  PrecisionBits precision_ = 0;
  std::size_t real_count_ = 0;
  PrecisionBits working_ = 0;
};

/// Each enclosure has diameter <= 2^-precision. Throws DomainError when the
/// polynomial has repeated roots ("repeated roots") or degree < 1.
EmbeddingSet isolate_roots(const IntPolynomial& f, PrecisionBits precision = kDefaultPrecision);

}  // namespace nbasis

#endif
