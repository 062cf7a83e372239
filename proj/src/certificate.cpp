#include "nbasis/certificate.hpp"

#include "nbasis/errors.hpp"

namespace nbasis {

std::string to_string(Method m) {
  switch (m) {
    case Method::Artin:
      return "artin";
    case Method::Lattice:
      return "lattice";
    case Method::Quadratic:
      break;
  }
  return "quadratic";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    case Verdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

Verdict verdict_at_most(Comparison c) {
  if (c == Comparison::Less || c == Comparison::Equal) return Verdict::True;
  if (c == Comparison::Greater) return Verdict::False;
  return Verdict::Inconclusive;
}

BoundCheck sqrt_discriminant_check(const std::string& name, const Integer& abs_disc, const Refinable& value,
                                   PrecisionBits precision) {
  BoundCheck b{name, std::nullopt, RealInterval(precision), Comparison::Inconclusive};
  Integer s = sqrt(abs_disc);
  if (s * s == abs_disc) {
    b.exact = Rational(s);
    b.enclosure = RealInterval(s, precision + 32);
    b.comparison = certified_compare(value, Rational(s), precision);
  } else {
    b.enclosure = sqrt(RealInterval(abs_disc, precision + 32));
    Refinable bound = [abs_disc](PrecisionBits p) { return sqrt(RealInterval(abs_disc, p + 32)); };
    b.comparison = certified_compare(value, bound, precision);
  }
  return b;
}

NormalBasisCertificate make_certificate(Method method, const FieldElement& beta, PrecisionBits precision) {
  NormalBasisCertificate c{method, beta, conjugates(beta), Rational(0), weil_height(beta, precision),
                           BoundCheck{"", std::nullopt, RealInterval(precision)}, {}, Verdict::Inconclusive,
                           {}, {}, {}, {}, {}, {}};
  std::vector<RationalVector> rows;
  for (const auto& b : c.basis) rows.push_back(b.coords());
  c.det_witness = RationalMatrix::from_rows(rows).determinant();
  if (c.det_witness == 0) throw DomainError("conjugates of " + beta.to_string() + " are linearly dependent");
  return c;
}

}  // namespace nbasis
