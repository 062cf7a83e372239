#ifndef NBASIS_ARTIN_HPP
#define NBASIS_ARTIN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "nbasis/certificate.hpp"

namespace nbasis {

struct PrimitiveElementResult {
  FieldElement theta;
  HeightReport height;
  /// False when no primitive element met the budget and the smallest-height
  /// one found was returned instead.
  bool within_budget = true;
  std::uint64_t candidates = 0;
};

/// First primitive integral element in small-first order over integral-basis
/// coordinates whose height is at most `budget` (default |Delta|^(1/d)).
PrimitiveElementResult find_primitive_element(const NumberField& k, std::optional<Rational> budget = std::nullopt,
                                              std::int64_t max_radius = 6,
                                              PrecisionBits precision = kDefaultPrecision);

/// g(x) = f(x) / ((x - alpha) f'(alpha)) for the monic minimal polynomial f of
/// alpha; coefficients constant term first. Throws DomainError unless alpha
/// is primitive.
std::vector<FieldElement> lagrange_resolvent(const FieldElement& alpha);
FieldElement evaluate_resolvent(const std::vector<FieldElement>& g, const FieldElement& x);

/// d^(4d) (d^2-d+2)^(4d-3) / 2^(4d-3) * C(d-1, floor((d-1)/2))^2 * abs_disc^((d-1)(4d-3))
Integer artin_bound(unsigned d, const Integer& abs_disc);

/// The same d-constant with the discriminant exponent halved; the tighter
/// primitive-element bound this relies on is not proved in general, so the
/// value is informational only.
BoundCheck halved_exponent_bound(unsigned d, const Integer& abs_disc, const Refinable& height, PrecisionBits precision);

struct ArtinOptions {
  std::optional<FieldElement> theta;
  PrecisionBits precision = kDefaultPrecision;
};

/// Searches xi in the box |xi| <= (d(d-1)+2)/2 and integer evaluation points
/// a in the same range (order 1, -1, 2, -2, ..., 0) for beta = g(a) with
/// nonsingular conjugate matrix. Throws NotGaloisError and SearchExhausted.
NormalBasisCertificate artin_search(const NumberField& k, const ArtinOptions& options = {});

/// h(f'(alpha)) <= d^2 C(d-1, floor((d-1)/2)) h(alpha)^(2d-1), f the minimal
/// polynomial of alpha.
Comparison derivative_height_check(const FieldElement& alpha, PrecisionBits precision = kDefaultPrecision);

/// For each embedding j: |sigma_j(beta)| <= d |g_j| max(1, |a|)^(d-1), where
/// beta = g(a) and |g_j| is the largest coefficient of the conjugated
/// resolvent. Returns false on a certified violation.
bool resolvent_size_check(const std::vector<FieldElement>& g, const Integer& a, PrecisionBits precision = kDefaultPrecision);

}  // namespace nbasis

#endif
