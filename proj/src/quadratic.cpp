#include <cmath>

#include "nbasis/errors.hpp"
#include "nbasis/lattice.hpp"

namespace nbasis {

namespace {

struct Candidate {
  FieldElement element;
  HeightReport height;
};

bool qualifies(const FieldElement& a) { return !a.is_rational() && trace(a) != 0; }

}  // namespace

NormalBasisCertificate quadratic_normal_basis(const NumberField& k, const QuadraticOptions& options) {
  if (k.degree() != 2)
    throw DispatchError("quadratic method needs degree 2 (got " + std::to_string(k.degree()) + ")");
  if (options.ratio_constant <= 0) throw InputError("ratio constant must be positive");
  const PrecisionBits prec = options.precision;
  const PrecisionBits wp = prec + 32;

  // First qualifying element in small-first order gives a height ceiling H.
  std::optional<Candidate> best;
  std::int64_t tried = 0;
  for (SmallFirstBox box(2, 64, false); box.next();) {
    ++tried;
    FieldElement a = k.from_integral_coordinates(box.point());
    if (!qualifies(a)) continue;
    best = Candidate{a, weil_height(a, prec)};
    break;
  }
  if (!best) throw SearchExhausted("search exhausted: no integral element with nonzero trace");

  // h(a) <= H forces |sigma_i(a)| <= H^2 for integral a; invert the 2x2
  // embedding matrix to bound integral coordinates.
  EmbeddingSet roots = k.embeddings(prec);
  ComplexInterval e[2][2] = {{embed(k.integral_basis_element(0), roots, 0), embed(k.integral_basis_element(1), roots, 0)},
                             {embed(k.integral_basis_element(0), roots, 1), embed(k.integral_basis_element(1), roots, 1)}};
  RealInterval det = abs(e[0][0] * e[1][1] - e[0][1] * e[1][0]);
  RealInterval u = square(best->height.height);
  RealInterval c0 = u * (abs(e[1][1]) + abs(e[0][1])) / det;
  RealInterval c1 = u * (abs(e[1][0]) + abs(e[0][0])) / det;
  const std::int64_t bound = static_cast<std::int64_t>(
      std::floor(std::max(c0.upper().to_double(), c1.upper().to_double()) * (1 + 1e-12)));

  for (SmallFirstBox box(2, bound, false); box.next();) {
    ++tried;
    FieldElement a = k.from_integral_coordinates(box.point());
    if (!qualifies(a)) continue;
    if (a.coords() == best->element.coords()) continue;
    HeightReport h = weil_height(a, prec);
    if (h.height.less_than(best->height.height)) best = Candidate{a, h};
  }

  NormalBasisCertificate c = make_certificate(Method::Quadratic, best->element, prec);
  const Integer abs_disc = abs(k.discriminant());
  c.bound = sqrt_discriminant_check("sqrt_abs_disc", abs_disc, height_of(best->element), prec);
  c.satisfied = verdict_at_most(c.bound.comparison);
  RealInterval quarter = root(RealInterval(abs_disc, wp), 4);
  c.height_ratio = c.height.height / (RealInterval(options.ratio_constant, wp) * quarter);
  c.ratio_constant = options.ratio_constant;
  c.stats.add("elements_enumerated", tried);
  c.stats.add("coefficient_bound", bound);
  return c;
}

}  // namespace nbasis
