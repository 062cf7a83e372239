#ifndef NBASIS_HEIGHTS_HPP
#define NBASIS_HEIGHTS_HPP

#include <functional>
#include <string>

#include "nbasis/interval.hpp"
#include "nbasis/number_field.hpp"
#include "nbasis/polynomial.hpp"

namespace nbasis {

/// |a_d| * prod max(1, |root|), outward-rounded. Non-squarefree input is
/// split multiplicatively. A root straddling the unit circle triggers
/// precision doubling up to `cap`.
RealInterval mahler_measure(const IntPolynomial& f, PrecisionBits precision = kDefaultPrecision,
                            PrecisionBits cap = kMaxPrecision);

struct HeightReport {
  FieldElement element;
  IntPolynomial minpoly;
  RealInterval mahler;
  RealInterval height;
};

/// Absolute Weil height as mahler(minpoly)^(1/deg). Exact for rationals.
/// Throws DomainError for zero.
HeightReport weil_height(const FieldElement& a, PrecisionBits precision = kDefaultPrecision);

enum class Comparison { Less, Greater, Equal, Inconclusive };
std::string to_string(Comparison c);

/// Enclosure of a quantity at the requested precision.
using Refinable = std::function<RealInterval(PrecisionBits)>;

Comparison certified_compare(const RealInterval& x, const Rational& bound);
Comparison certified_compare(const RealInterval& x, const RealInterval& bound);
Comparison certified_compare(const Rational& x, const Rational& bound);
/// Doubles the precision from `start` until the enclosures separate or
/// `max_precision` is passed.
Comparison certified_compare(const Refinable& x, const Rational& bound, PrecisionBits start = kDefaultPrecision,
                             PrecisionBits max_precision = kMaxPrecision);
Comparison certified_compare(const Refinable& x, const Refinable& bound, PrecisionBits start = kDefaultPrecision,
                             PrecisionBits max_precision = kMaxPrecision);

/// Refinable height of a field element.
Refinable height_of(const FieldElement& a);

/// max_j |sigma_j(a)| over the embeddings in `roots`.
RealInterval embedding_sup_norm(const FieldElement& a, const EmbeddingSet& roots);

}  // namespace nbasis

#endif
