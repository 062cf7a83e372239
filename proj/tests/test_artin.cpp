#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nbasis/artin.hpp"
#include "nbasis/errors.hpp"
#include "oracles.hpp"

using namespace nbasis;

namespace {

FieldPtr field(std::initializer_list<long> f) { return make_field(make_int_polynomial(f)); }

FieldElement el(const FieldPtr& k, std::initializer_list<Rational> c) { return k->element(RationalVector(c)); }

std::vector<FieldPtr> galois_fields() {
  return {field({-1, -1, 1}),    field({-5, 0, 1}),     field({1, 0, 1}),         field({1, 1, 1}),
          field({-1, -2, 1, 1}), field({-1, -3, 0, 1}), field({1, 1, 1, 1, 1}), field({1, 0, 0, 0, 1}),
          field({1, 0, -1, 0, 1}), field({2, 0, -4, 0, 1}), field({1, 3, -3, -4, 1, 1})};
}

Integer ipow(Integer b, unsigned long e) {
  Integer r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

// Product of the resolvent with (x - alpha) f'(alpha), coefficients in K.
std::vector<FieldElement> times_linear(const std::vector<FieldElement>& g, const FieldElement& alpha,
                                       const FieldElement& scale) {
  const FieldPtr& k = alpha.field();
  std::vector<FieldElement> out(g.size() + 1, k->zero());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i + 1] = out[i + 1] + g[i] * scale;
    out[i] = out[i] - g[i] * scale * alpha;
  }
  return out;
}

FieldElement derivative_at(const IntPolynomial& f, const FieldElement& a) {
  FieldElement acc = a.field()->zero();
  for (int i = f.degree(); i >= 1; --i) acc = acc * a + Rational(f.coeff(static_cast<std::size_t>(i)) * i);
  return acc;
}

}  // namespace

TEST_CASE("primitive element search") {
  FieldPtr q = field({-1, -1, 1});
  PrimitiveElementResult r = find_primitive_element(*q);
  CHECK(r.theta == q->generator());
  CHECK(r.within_budget);
  CHECK(r.height.height.to_double() == doctest::Approx(std::sqrt((1 + std::sqrt(5.0)) / 2)).epsilon(1e-12));
  CHECK(r.height.height.less_than(Rational(22361, 10000)));
  // the zero vector and the rational 1 come first and are skipped
  CHECK(r.candidates >= 2);

  FieldPtr c = field({-1, -2, 1, 1});
  PrimitiveElementResult rc = find_primitive_element(*c);
  CHECK(rc.theta == c->generator());
  CHECK(rc.height.height.to_double() == doctest::Approx(1.3097).epsilon(1e-4));
  CHECK(rc.height.height.less_than(Rational(3659, 1000)));

  for (const auto& k : galois_fields()) {
    PrimitiveElementResult p = find_primitive_element(*k);
    CHECK(is_primitive(p.theta));
    CHECK(is_integral(p.theta));
    CHECK(p.within_budget);
  }
}

TEST_CASE("Lagrange resolvent of sqrt(5)") {
  FieldPtr k = field({-5, 0, 1});
  FieldElement a = k->generator();
  std::vector<FieldElement> g = lagrange_resolvent(a);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == k->from_rational(Rational(1, 2)));
  CHECK(g[1] == el(k, {0, Rational(1, 10)}));
  CHECK(evaluate_resolvent(g, a) == k->one());
  CHECK(evaluate_resolvent(g, -a).is_zero());
  CHECK_THROWS_AS(lagrange_resolvent(k->from_rational(3)), DomainError);
}

TEST_CASE("resolvent identities across the corpus") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<int> c(-2, 2);
  for (const auto& k : galois_fields()) {
    const auto& auts = k->automorphisms().automorphisms;
    for (int t = 0; t < 4; ++t) {
      RationalVector v;
      for (std::size_t i = 0; i < k->degree(); ++i) v.push_back(Rational(c(rng)));
      FieldElement a = k->element(v);
      if (!is_primitive(a)) continue;
      std::vector<FieldElement> g = lagrange_resolvent(a);
      CHECK(g.size() == k->degree());
      CHECK(evaluate_resolvent(g, a) == k->one());
      for (std::size_t s = 1; s < auts.size(); ++s) CHECK(evaluate_resolvent(g, auts[s].apply(a)).is_zero());
      // f(x) = (x - a) f'(a) g(x) with f the monic minimal polynomial of a
      IntPolynomial mp = minimal_polynomial(a);
      RatPolynomial monic = to_rational(mp) * Rational(1 / Rational(mp.leading()));
      FieldElement fp = k->zero();
      for (int i = monic.degree(); i >= 1; --i) fp = fp * a + monic.coeff(static_cast<std::size_t>(i)) * Rational(i);
      std::vector<FieldElement> prod = times_linear(g, a, fp);
      for (std::size_t i = 0; i < prod.size(); ++i) CHECK(prod[i] == k->from_rational(monic.coeff(i)));
      // sum of the conjugated resolvents is the constant polynomial 1
      for (std::size_t i = 0; i < g.size(); ++i) {
        FieldElement sum = k->zero();
        for (const auto& s : auts) sum = sum + s.apply(g[i]);
        CHECK(sum == k->from_rational(i == 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("bound formula") {
  CHECK(artin_bound(2, Integer(5)) == 25600000);
  CHECK(artin_bound(3, Integer(49)) == ipow(3, 12) * ipow(2, 20) * ipow(49, 18));
  // d = 4: 4^16 * 14^13 / 2^13 * C(3,1)^2
  CHECK(artin_bound(4, Integer(1)) == ipow(4, 16) * ipow(7, 13) * 9);
  // d = 5: 22^17 / 2^17 = 11^17, C(4,2)^2 = 36
  CHECK(artin_bound(5, Integer(1)) == ipow(5, 20) * ipow(11, 17) * 36);
  CHECK(artin_bound(3, Integer(81)) == artin_bound(3, Integer(1)) * ipow(81, 18));
}

TEST_CASE("Artin search on the golden-ratio field") {
  FieldPtr q = field({-1, -1, 1});
  NormalBasisCertificate cert = artin_search(*q);
  CHECK(cert.method == Method::Artin);
  REQUIRE(cert.artin.has_value());
  CHECK(cert.artin->theta == q->generator());
  CHECK(cert.artin->xi == IntVector{0, 1});
  CHECK(cert.artin->eval_point == 1);
  CHECK(cert.beta == el(q, {Rational(2, 5), Rational(1, 5)}));
  REQUIRE(cert.basis.size() == 2);
  CHECK(cert.basis[1] == el(q, {Rational(3, 5), Rational(-1, 5)}));
  CHECK(cert.det_witness == Rational(-1, 5));
  CHECK(cert.height.minpoly == make_int_polynomial({1, -5, 5}));
  CHECK(cert.height.mahler.contains(Rational(5)));
  CHECK(cert.height.height.greater_than(Rational(22360, 10000)));
  CHECK(cert.height.height.less_than(Rational(22361, 10000)));
  CHECK(trace(cert.beta) == 1);
  CHECK(cert.bound.exact == Rational(25600000));
  CHECK(cert.bound.comparison == Comparison::Less);
  CHECK(cert.satisfied == Verdict::True);
}

TEST_CASE("Artin certificates are exact normal bases") {
  for (const auto& k : galois_fields()) {
    CAPTURE(to_string(k->defining_polynomial()));
    NormalBasisCertificate cert = artin_search(*k);
    RationalMatrix m = conjugate_coordinate_matrix(cert.beta);
    CHECK(m.determinant() == cert.det_witness);
    CHECK(cert.det_witness != 0);
    CHECK(m.kernel().empty());
    REQUIRE(cert.basis.size() == k->degree());
    const auto& auts = k->automorphisms().automorphisms;
    for (std::size_t i = 0; i < auts.size(); ++i) {
      CHECK(cert.basis[i] == auts[i].apply(cert.beta));
      CHECK(minimal_polynomial(cert.basis[i]) == cert.height.minpoly);
    }
    CHECK(cert.bound.exact == artin_bound(static_cast<unsigned>(k->degree()), abs(k->discriminant())));
    CHECK(cert.satisfied == Verdict::True);
    const std::int64_t box = static_cast<std::int64_t>((k->degree() * (k->degree() - 1) + 2) / 2);
    CHECK(sup_norm(cert.artin->xi) <= box);
    CHECK(abs(cert.artin->eval_point) <= box);
    CHECK(is_primitive(cert.artin->alpha));
    for (const auto& b : cert.extra_bounds) CHECK(b.informational);
    // size of the accepted candidate against its resolvent coefficients
    CHECK(resolvent_size_check(lagrange_resolvent(cert.artin->alpha), cert.artin->eval_point));
  }
}

TEST_CASE("a supplied primitive element is honored") {
  FieldPtr c = field({-1, -2, 1, 1});
  FieldElement theta = c->generator() + Rational(1);
  NormalBasisCertificate cert = artin_search(*c, ArtinOptions{theta, kDefaultPrecision});
  CHECK(cert.artin->theta == theta);
  CHECK(cert.det_witness != 0);
  CHECK_THROWS_AS(artin_search(*field({-2, 0, 0, 1})), NotGaloisError);
}

TEST_CASE("derivative height inequality on primitive elements (reported)") {
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<int> c(-2, 2);
  int violations = 0;
  for (const auto& k : galois_fields()) {
    for (int t = 0; t < 6; ++t) {
      RationalVector v;
      for (std::size_t i = 0; i < k->degree(); ++i) v.push_back(Rational(c(rng)));
      FieldElement a = k->element(v);
      if (!is_primitive(a)) continue;
      Comparison cmp = derivative_height_check(a);
      if (cmp == Comparison::Greater) ++violations;
      WARN(cmp != Comparison::Greater);
      // the quantity checked is h(f'(a)) for f the minimal polynomial
      IntPolynomial mp = minimal_polynomial(a);
      CHECK_FALSE(derivative_at(mp, a).is_zero());
    }
  }
  MESSAGE("derivative height violations: ", violations);
}
