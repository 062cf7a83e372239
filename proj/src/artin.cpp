#include "nbasis/artin.hpp"

#include <algorithm>

#include "nbasis/errors.hpp"

namespace nbasis {

namespace {

// 1, -1, 2, -2, ..., r, -r, 0
std::vector<Integer> evaluation_points(std::int64_t r) {
  std::vector<Integer> pts;
  for (std::int64_t k = 1; k <= r; ++k) {
    pts.emplace_back(static_cast<long>(k));
    pts.emplace_back(static_cast<long>(-k));
  }
  pts.emplace_back(0);
  return pts;
}

}  // namespace

PrimitiveElementResult find_primitive_element(const NumberField& k, std::optional<Rational> budget,
                                              std::int64_t max_radius, PrecisionBits precision) {
  const std::size_t d = k.degree();
  const Integer abs_disc = abs(k.discriminant());
  SmallFirstBox box(d, max_radius, false);
  std::optional<PrimitiveElementResult> best;
  std::uint64_t tried = 0;
  while (box.next()) {
    ++tried;
    IntVector c(box.point().begin(), box.point().end());
    FieldElement a = k.from_integral_coordinates(c);
    if (!is_primitive(a)) continue;
    HeightReport h = weil_height(a, precision);
    // h <= |Delta|^(1/d) is mu <= |Delta| for a primitive element.
    Comparison cmp = budget ? certified_compare(height_of(a), *budget, precision)
                            : certified_compare(
                                  [a](PrecisionBits p) { return weil_height(a, p).mahler; }, Rational(abs_disc),
                                  precision);
    if (cmp == Comparison::Less || cmp == Comparison::Equal) return {a, h, true, tried};
    if (!best || h.height.upper() < best->height.height.upper()) best = PrimitiveElementResult{a, h, false, 0};
  }
  if (!best) throw SearchExhausted("no primitive element within coordinate radius " + std::to_string(max_radius));
  best->candidates = tried;
  return *best;
}

std::vector<FieldElement> lagrange_resolvent(const FieldElement& alpha) {
  IntPolynomial m = minimal_polynomial(alpha);
  const std::size_t d = alpha.degree();
  if (static_cast<std::size_t>(m.degree()) != d) throw DomainError("resolvent needs a primitive element");
  RatPolynomial f = to_rational(m) * Rational(Rational(1) / Rational(m.leading()));
  const FieldPtr& k = alpha.field();
  // Synthetic division: f(x) = (x - alpha) q(x), q monic of degree d-1.
  std::vector<FieldElement> q(d, k->zero());
  q[d - 1] = k->one();
  for (std::size_t i = d - 1; i-- > 0;) q[i] = alpha * q[i + 1] + f.coeff(i + 1);
  // f'(alpha) = q(alpha)
  FieldElement fprime = k->zero();
  for (std::size_t i = d; i-- > 0;) fprime = fprime * alpha + q[i];
  FieldElement inv = fprime.inverse();
  for (auto& c : q) c = c * inv;
  return q;
}

FieldElement evaluate_resolvent(const std::vector<FieldElement>& g, const FieldElement& x) {
  FieldElement acc = x.field()->zero();
  for (std::size_t i = g.size(); i-- > 0;) acc = acc * x + g[i];
  return acc;
}

Integer artin_bound(unsigned d, const Integer& abs_disc) {
  if (d < 2) throw DomainError("degree must be at least 2");
  if (abs_disc < 1) throw DomainError("discriminant must be nonzero");
  const unsigned long e = 4ul * d - 3;
  Integer num = pow(Integer(d), 4ul * d) * pow(Integer(static_cast<long>(d) * d - d + 2), e);
  Integer c = binomial(d - 1, (d - 1) / 2);
  Integer value = num * c * c * pow(abs_disc, static_cast<unsigned long>(d - 1) * e);
  Integer den = pow(Integer(2), e);
  if (value % den != 0) throw DomainError("Artin bound is not an integer");
  return value / den;
}

BoundCheck halved_exponent_bound(unsigned d, const Integer& abs_disc, const Refinable& height,
                                 PrecisionBits precision) {
  const Integer constant = artin_bound(d, 1);
  const unsigned long e = static_cast<unsigned long>(d - 1) * (4ul * d - 3);
  const Integer base = constant * pow(abs_disc, e / 2);
  BoundCheck b;
  if (e % 2 == 0) {
    b = BoundCheck{"", Rational(base), RealInterval(base, precision + 32), certified_compare(height, Rational(base), precision)};
  } else {
    b = sqrt_discriminant_check("", abs_disc, [height, base](PrecisionBits p) {
      return height(p) / RealInterval(base, p + 32);
    }, precision);
    b.enclosure = RealInterval(base, precision + 32) * b.enclosure;
    if (b.exact) b.exact = Rational(base) * *b.exact;
  }
  b.name = "halved_discriminant_exponent";
  b.informational = true;
  return b;
}

NormalBasisCertificate artin_search(const NumberField& k, const ArtinOptions& options) {
  const AutomorphismGroup& g = k.automorphisms(options.precision);
  if (g.status != GaloisStatus::Galois)
    throw NotGaloisError("not Galois (" + std::to_string(g.size()) + " automorphism" + (g.size() == 1 ? "" : "s") +
                         ")");
  const std::size_t d = k.degree();
  const PrecisionBits prec = options.precision;
  FieldElement theta = options.theta ? *options.theta : find_primitive_element(k, std::nullopt, 6, prec).theta;
  if (!is_primitive(theta)) throw InputError("supplied theta is not primitive");

  const std::int64_t radius = static_cast<std::int64_t>((d * (d - 1) + 2) / 2);
  const std::vector<Integer> points = evaluation_points(radius);
  std::vector<FieldElement> theta_powers{k.one()};
  for (std::size_t i = 1; i < d; ++i) theta_powers.push_back(theta_powers.back() * theta);

  SmallFirstBox box(d, radius, false);
  std::int64_t xi_tried = 0, non_primitive = 0, points_tried = 0;
  while (box.next()) {
    ++xi_tried;
    FieldElement alpha = k.zero();
    for (std::size_t i = 0; i < d; ++i)
      if (box.point()[i] != 0) alpha = alpha + theta_powers[i] * Rational(static_cast<long>(box.point()[i]));
    if (!is_primitive(alpha)) {
      ++non_primitive;
      continue;
    }
    std::vector<FieldElement> res = lagrange_resolvent(alpha);
    for (const Integer& a : points) {
      ++points_tried;
      FieldElement beta = evaluate_resolvent(res, k.from_rational(Rational(a)));
      if (beta.is_zero() || conjugate_coordinate_matrix(beta).determinant() == 0) continue;

      NormalBasisCertificate c = make_certificate(Method::Artin, beta, prec);
      c.artin = ArtinSearchState{theta, IntVector(box.point().begin(), box.point().end()), alpha, a};
      Integer bound = artin_bound(static_cast<unsigned>(d), abs(k.discriminant()));
      c.bound = BoundCheck{"artin_bound", Rational(bound), RealInterval(bound, prec + 32),
                           certified_compare(height_of(beta), Rational(bound), prec)};
      c.satisfied = verdict_at_most(c.bound.comparison);
      c.extra_bounds.push_back(
          halved_exponent_bound(static_cast<unsigned>(d), abs(k.discriminant()), height_of(beta), prec));
      c.stats.add("xi_tried", xi_tried);
      c.stats.add("non_primitive_skipped", non_primitive);
      c.stats.add("evaluation_points_tried", points_tried);
      c.stats.add("xi_box_radius", radius);
      c.stats.add("evaluation_box_radius", radius);
      return c;
    }
  }
  throw SearchExhausted("search exhausted: no xi with |xi| <= " + std::to_string(radius) +
                        " and evaluation point gave independent conjugates");
}

Comparison derivative_height_check(const FieldElement& alpha, PrecisionBits precision) {
  IntPolynomial f = minimal_polynomial(alpha);
  const unsigned long d = static_cast<unsigned long>(f.degree());
  IntPolynomial fp = f.derivative();
  FieldElement v = alpha.field()->zero();
  for (std::size_t i = fp.size(); i-- > 0;) v = v * alpha + Rational(fp.coefficients()[i]);
  if (v.is_zero()) return Comparison::Inconclusive;
  RealInterval lhs = weil_height(v, precision).height;
  RealInterval h = weil_height(alpha, precision).height;
  Integer c = Integer(d * d) * binomial(d - 1, (d - 1) / 2);
  RealInterval rhs = RealInterval(c, precision + 32) * pow(h, 2 * d - 1);
  if (lhs.upper() <= rhs.lower()) return Comparison::Less;
  if (rhs.less_than(lhs)) return Comparison::Greater;
  return Comparison::Inconclusive;
}

bool resolvent_size_check(const std::vector<FieldElement>& g, const Integer& a, PrecisionBits precision) {
  const FieldPtr& k = g.front().field();
  const std::size_t d = k->degree();
  EmbeddingSet roots = k->embeddings(precision);
  FieldElement beta = evaluate_resolvent(g, k->from_rational(Rational(a)));
  const PrecisionBits wp = precision + 32;
  RealInterval amax = max(abs(RealInterval(a, wp)), 1);
  RealInterval factor = RealInterval(Integer(static_cast<long>(d)), wp) * pow(amax, d - 1);
  for (std::size_t j = 0; j < d; ++j) {
    RealInterval gmax(wp);
    for (const auto& c : g) {
      RealInterval m = abs(embed(c, roots, j));
      gmax = RealInterval(std::max(gmax.lower(), m.lower()), std::max(gmax.upper(), m.upper()));
    }
    RealInterval lhs = abs(embed(beta, roots, j));
    if ((factor * gmax).less_than(lhs)) return false;
  }
  return true;
}

}  // namespace nbasis
