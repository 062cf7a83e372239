#include "nbasis/heights.hpp"

#include "nbasis/errors.hpp"
#include "nbasis/roots.hpp"

namespace nbasis {

namespace {

RealInterval squarefree_mahler(const IntPolynomial& f, PrecisionBits precision, PrecisionBits cap) {
  const PrecisionBits wp = precision + 32;
  RealInterval lead = abs(RealInterval(f.leading(), wp));
  if (f.degree() == 0) return lead;
  const BigFloat tol = exp2(-static_cast<long>(precision), wp);
  EmbeddingSet roots = isolate_roots(f, precision);
  PrecisionBits p = precision;
  while (true) {
    RealInterval product = lead;
    bool straddle = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      RealInterval m = abs(roots.root(i));
      if (m.contains(Rational(1)) && !(m.lower() == m.upper())) {
        BigFloat excess = m.upper() - BigFloat(1.0, wp);
        if (excess > tol) straddle = true;
      }
      product = product * max(m, 1);
    }
    if (!straddle || p >= cap) return product;
    p = std::min<PrecisionBits>(p * 2, cap);
    roots.refine(p);
  }
}

}  // namespace

RealInterval mahler_measure(const IntPolynomial& f, PrecisionBits precision, PrecisionBits cap) {
  if (f.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  if (f.degree() == 0) return abs(RealInterval(f.leading(), precision + 32));
  RatPolynomial fr = to_rational(f);
  RatPolynomial g = gcd(fr, fr.derivative());
  if (g.degree() <= 0) return squarefree_mahler(f, precision, cap);
  // f = lambda * G * Q with G, Q primitive integer polynomials.
  RatPolynomial q = divmod(fr, g).first;
  IntPolynomial gi = primitive_integer_multiple(g), qi = primitive_integer_multiple(q);
  Rational lambda = Rational(f.leading()) / Rational(gi.leading() * qi.leading());
  RealInterval scale = abs(RealInterval(lambda, precision + 32));
  return scale * mahler_measure(gi, precision, cap) * squarefree_mahler(qi, precision, cap);
}

HeightReport weil_height(const FieldElement& a, PrecisionBits precision) {
  if (a.is_zero()) throw DomainError("height of zero");
  IntPolynomial m = minimal_polynomial(a);
  if (m.degree() == 1) {
    Rational q = a.rational_value();
    Integer h = std::max(Integer(abs(q.get_num())), Integer(q.get_den()));
    RealInterval exact(h, precision + 32);
    return {a, m, exact, exact};
  }
  RealInterval mu = mahler_measure(m, precision);
  RealInterval h = root(mu, static_cast<unsigned long>(m.degree()));
  return {a, m, mu, h};
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Less:
      return "LESS";
    case Comparison::Greater:
      return "GREATER";
    case Comparison::Equal:
      return "EQUAL";
    case Comparison::Inconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

Comparison certified_compare(const RealInterval& x, const Rational& bound) {
  if (x.less_than(bound)) return Comparison::Less;
  if (x.greater_than(bound)) return Comparison::Greater;
  return Comparison::Inconclusive;
}

Comparison certified_compare(const RealInterval& x, const RealInterval& bound) {
  if (x.less_than(bound)) return Comparison::Less;
  if (bound.less_than(x)) return Comparison::Greater;
  return Comparison::Inconclusive;
}

Comparison certified_compare(const Rational& x, const Rational& bound) {
  if (x < bound) return Comparison::Less;
  if (x > bound) return Comparison::Greater;
  return Comparison::Equal;
}

Comparison certified_compare(const Refinable& x, const Rational& bound, PrecisionBits start,
                             PrecisionBits max_precision) {
  for (PrecisionBits p = start; p <= max_precision; p *= 2) {
    Comparison c = certified_compare(x(p), bound);
    if (c != Comparison::Inconclusive) return c;
  }
  return Comparison::Inconclusive;
}

Comparison certified_compare(const Refinable& x, const Refinable& bound, PrecisionBits start,
                             PrecisionBits max_precision) {
  for (PrecisionBits p = start; p <= max_precision; p *= 2) {
    Comparison c = certified_compare(x(p), bound(p));
    if (c != Comparison::Inconclusive) return c;
  }
  return Comparison::Inconclusive;
}

Refinable height_of(const FieldElement& a) {
  return [a](PrecisionBits p) { return weil_height(a, p).height; };
}

RealInterval embedding_sup_norm(const FieldElement& a, const EmbeddingSet& roots) {
  RealInterval best = abs(embed(a, roots, 0));
  for (std::size_t j = 1; j < roots.size(); ++j) {
    RealInterval m = abs(embed(a, roots, j));
    best = RealInterval(std::max(best.lower(), m.lower()), std::max(best.upper(), m.upper()));
  }
  return best;
}

}  // namespace nbasis
