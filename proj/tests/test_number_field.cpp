#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nbasis/errors.hpp"
#include "nbasis/number_field.hpp"
#include "oracles.hpp"

using namespace nbasis;

namespace {

FieldPtr field(std::initializer_list<long> f) { return make_field(make_int_polynomial(f)); }

FieldElement el(const FieldPtr& k, std::initializer_list<long> c) {
  RationalVector v;
  for (long x : c) v.push_back(Rational(x));
  return k->element(v);
}

FieldElement random_element(std::mt19937_64& rng, const FieldPtr& k, int bound = 3) {
  std::uniform_int_distribution<int> c(-bound, bound), den(1, 3);
  RationalVector v;
  for (std::size_t i = 0; i < k->degree(); ++i) {
    Rational q(c(rng), den(rng));
    q.canonicalize();
    v.push_back(q);
  }
  return k->element(v);
}

std::vector<FieldPtr> galois_fields() {
  return {field({-1, -1, 1}), field({-5, 0, 1}),   field({1, 0, 1}),         field({-1, -2, 1, 1}),
          field({-1, -3, 0, 1}), field({1, 1, 1, 1, 1}), field({1, 0, 0, 0, 1}), field({2, 0, -4, 0, 1}),
          field({1, 3, -3, -4, 1, 1})};
}

}  // namespace

TEST_CASE("field construction and discriminants") {
  FieldPtr k = field({-5, 0, 1});
  CHECK(k->degree() == 2);
  CHECK(k->discriminant() == 20);
  RationalMatrix basis{{1, 0}, {Rational(1, 2), Rational(1, 2)}};
  FieldPtr k2 = make_field(make_int_polynomial({-5, 0, 1}), basis);
  CHECK(k2->discriminant() == 5);
  CHECK(k2->polynomial_discriminant() == 20);
  CHECK(k2->has_supplied_integral_basis());

  FieldPtr c = field({-1, -2, 1, 1});
  CHECK(c->discriminant() == 49);
  CHECK(c->is_totally_real());
  // 49 is not squarefree, so the maximality warning is raised
  CHECK(c->warnings().size() == 1);

  CHECK_THROWS_AS(make_field(make_int_polynomial({-5, 0, 2})), InputError);
  CHECK_THROWS_AS(make_field(make_int_polynomial({1, 1})), InputError);
  CHECK_THROWS_AS(make_field(make_int_polynomial({1, -2, 1})), InputError);
  // basis element (1+x)/3 is not integral
  CHECK_THROWS_AS(make_field(make_int_polynomial({-5, 0, 1}), RationalMatrix{{1, 0}, {Rational(1, 3), Rational(1, 3)}}),
                  InputError);
}

TEST_CASE("element arithmetic") {
  FieldPtr k = field({-5, 0, 1});
  FieldElement t = k->generator();
  CHECK(t * t == k->from_rational(5));
  CHECK((t + (-t)).is_zero());

  FieldPtr c = field({-1, -2, 1, 1});
  FieldElement th = c->generator();
  FieldElement inv = th.inverse();
  CHECK(inv == el(c, {-2, 1, 1}));
  CHECK(th * el(c, {-2, 1, 1}) == c->one());
  CHECK_THROWS_AS(c->zero().inverse(), DomainError);
  CHECK(th.pow(3) == th * th * th);

  FieldPtr red = field({-1, 0, 1});
  CHECK_THROWS_AS((red->generator() + Rational(-1)).inverse(), ReducibleError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    FieldElement a = random_element(rng, c);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == c->one());
  }
}

TEST_CASE("minimal polynomials, trace and norm") {
  FieldPtr c = field({-1, -2, 1, 1});
  FieldElement th = c->generator();
  CHECK(minimal_polynomial(th) == make_int_polynomial({-1, -2, 1, 1}));
  CHECK(minimal_polynomial(c->from_rational(5)) == make_int_polynomial({-5, 1}));
  CHECK(minimal_polynomial(th * th) == make_int_polynomial({-1, 6, -5, 1}));
  TraceNorm tn = trace_and_norm(th);
  CHECK(tn.trace == -1);
  CHECK(tn.norm == 1);
  CHECK(trace(field({-1, -3, 0, 1})->generator()) == 0);
  TraceNorm q = trace_and_norm(c->from_rational(Rational(2, 3)));
  CHECK(q.trace == 2);
  CHECK(q.norm == Rational(8, 27));
  CHECK(is_integral(th));
  CHECK_FALSE(is_integral(th * Rational(1, 2)));
  CHECK(is_primitive(th));
  CHECK_FALSE(is_primitive(c->one()));
  FieldPtr quartic = field({1, 0, 0, 0, 1});
  CHECK(minimal_polynomial(quartic->generator().pow(2)) == make_int_polynomial({1, 0, 1}));
  CHECK_FALSE(is_primitive(quartic->generator().pow(2)));
}

TEST_CASE("characteristic polynomial agrees with the multiplication matrix") {
  std::mt19937_64 rng(5);
  for (const auto& k : galois_fields()) {
    for (int i = 0; i < 8; ++i) {
      FieldElement a = random_element(rng, k);
      RatPolynomial cp = characteristic_polynomial(a);
      CHECK(cp == oracle::multiplication_charpoly(a));
      CHECK(trace(a) == oracle::multiplication_trace(a));
      // charpoly = minpoly^(d/deg), made monic
      IntPolynomial mp = minimal_polynomial(a);
      RatPolynomial monic = to_rational(mp) * Rational(1 / Rational(mp.leading()));
      RatPolynomial power = RatPolynomial::constant(Rational(1));
      for (int e = 0; e < static_cast<int>(k->degree()) / mp.degree(); ++e) power = power * monic;
      CHECK(cp == power);
      CHECK(static_cast<int>(k->degree()) % mp.degree() == 0);
    }
  }
}

TEST_CASE("automorphisms of the reference fields") {
  FieldPtr k = field({-5, 0, 1});
  const AutomorphismGroup& g = k->automorphisms();
  REQUIRE(g.size() == 2);
  CHECK(g.automorphisms[0].is_identity());
  CHECK(g.automorphisms[1].image_of_generator() == el(k, {0, -1}));
  CHECK(is_galois(*k) == GaloisStatus::Galois);

  FieldPtr c = field({-1, -2, 1, 1});
  const AutomorphismGroup& gc = c->automorphisms();
  REQUIRE(gc.size() == 3);
  CHECK(gc.automorphisms[0].image_of_generator() == el(c, {0, 1, 0}));
  CHECK(gc.automorphisms[1].image_of_generator() == el(c, {-2, 0, 1}));
  CHECK(gc.automorphisms[2].image_of_generator() == el(c, {1, -1, -1}));
  CHECK(is_galois(*c) == GaloisStatus::Galois);

  FieldPtr p = field({-2, 0, 0, 1});
  CHECK(p->automorphisms().size() == 1);
  CHECK(is_galois(*p) == GaloisStatus::NotGalois);
  CHECK_THROWS_AS(conjugates(p->generator()), NotGaloisError);

  for (const auto& f : galois_fields()) {
    CAPTURE(to_string(f->defining_polynomial()));
    CHECK(is_galois(*f) == GaloisStatus::Galois);
    CHECK(f->automorphisms().size() == f->degree());
  }
}

TEST_CASE("conjugate coordinate matrices") {
  FieldPtr c = field({-1, -2, 1, 1});
  RationalMatrix m = conjugate_coordinate_matrix(c->generator());
  CHECK(m == RationalMatrix{{0, 1, 0}, {-2, 0, 1}, {1, -1, -1}});
  CHECK(m.determinant() == -1);
  RationalMatrix one = conjugate_coordinate_matrix(c->one());
  for (std::size_t i = 0; i < 3; ++i) CHECK(one.row(i) == RationalVector{Rational(1), Rational(0), Rational(0)});
  CHECK(one.determinant() == 0);

  FieldPtr q = field({-1, -1, 1});
  RationalMatrix phi = conjugate_coordinate_matrix(q->generator());
  CHECK(phi == RationalMatrix{{0, 1}, {1, -1}});
  CHECK(phi.determinant() == -1);
}

TEST_CASE("automorphisms are ring homomorphisms fixing Q") {
  std::mt19937_64 rng(29);
  for (const auto& k : galois_fields()) {
    for (const auto& s : k->automorphisms().automorphisms) {
      CHECK(s.apply(k->from_rational(Rational(3, 7))) == k->from_rational(Rational(3, 7)));
      for (int i = 0; i < 50; ++i) {
        FieldElement a = random_element(rng, k), b = random_element(rng, k);
        CHECK(s.apply(a * b) == s.apply(a) * s.apply(b));
        CHECK(s.apply(a + b) == s.apply(a) + s.apply(b));
      }
    }
  }
}

TEST_CASE("automorphism list is closed under composition") {
  for (const auto& k : galois_fields()) {
    const auto& auts = k->automorphisms().automorphisms;
    for (const auto& s : auts)
      for (const auto& t : auts) {
        FieldElement img = s.apply(t.image_of_generator());
        bool found = false;
        for (const auto& u : auts) found = found || u.image_of_generator() == img;
        CHECK(found);
      }
  }
}

TEST_CASE("trace is the conjugate sum; minpoly and degeneracy invariants") {
  std::mt19937_64 rng(31);
  for (const auto& k : galois_fields()) {
    for (int i = 0; i < 10; ++i) {
      FieldElement a = random_element(rng, k);
      std::vector<FieldElement> conj = conjugates(a);
      FieldElement sum = k->zero();
      for (const auto& c : conj) sum = sum + c;
      CHECK(sum.is_rational());
      CHECK(sum.rational_value() == trace(a));
      for (const auto& c : conj) CHECK(minimal_polynomial(c) == minimal_polynomial(a));
      if (minimal_polynomial(a).degree() < static_cast<int>(k->degree()))
        CHECK(conjugate_coordinate_matrix(a).determinant() == 0);
    }
    // an element of a proper subfield, or a rational, has dependent conjugates
    CHECK(conjugate_coordinate_matrix(k->from_rational(2)).determinant() == 0);
  }
  FieldPtr quartic = field({1, 0, 0, 0, 1});
  FieldElement sub = quartic->generator().pow(2) + Rational(1);
  CHECK(minimal_polynomial(sub).degree() == 2);
  CHECK(conjugate_coordinate_matrix(sub).determinant() == 0);
}

TEST_CASE("supplied automorphisms are verified exactly") {
  auto f = make_int_polynomial({-1, -2, 1, 1});
  FieldPtr k = make_field(f, std::nullopt, {RationalVector{Rational(-2), Rational(0), Rational(1)}});
  CHECK(k->automorphisms().size() == 3);
  CHECK_THROWS_AS(make_field(f, std::nullopt, {RationalVector{Rational(-1), Rational(0), Rational(1)}}), InputError);
}

TEST_CASE("embeddings agree with an independent root finder") {
  FieldPtr c = field({-1, -2, 1, 1});
  auto approx = c->embeddings().approximations();
  REQUIRE(approx.size() == 3);
  CHECK(approx[0].first < approx[1].first);
  CHECK(approx[1].first < approx[2].first);
  CHECK(approx[0].first == doctest::Approx(-1.8019377358).epsilon(1e-9));
  CHECK(approx[1].first == doctest::Approx(-0.4450418679).epsilon(1e-9));
  CHECK(approx[2].first == doctest::Approx(1.2469796037).epsilon(1e-9));

  FieldPtr k = field({1, 0, 1});
  auto z = k->embeddings().approximations();
  CHECK(z[0].second > 0);
  CHECK(z[1].second < 0);
  CHECK_FALSE(k->is_totally_real());

  FieldPtr q = field({-5, 0, 1});
  CHECK(q->embeddings().root(1).re.contains(Rational(22360679, 10000000)) == false);
  CHECK(q->embeddings().root(1).re.greater_than(Rational(22360679, 10000000)));
  CHECK(q->embeddings().root(1).re.less_than(Rational(22360680, 10000000)));

  std::mt19937_64 rng(37);
  for (const auto& f : galois_fields()) {
    auto roots = oracle::durand_kerner(f->defining_polynomial());
    for (int i = 0; i < 5; ++i) {
      FieldElement a = random_element(rng, f);
      for (std::size_t j = 0; j < f->degree(); ++j) {
        ComplexInterval v = embed(a, f->embeddings(), j);
        bool matched = false;
        for (const auto& r : roots) {
          auto o = oracle::embed(a, r);
          matched = matched || (std::abs(static_cast<double>(o.real()) - v.re.to_double()) < 1e-9 &&
                                std::abs(static_cast<double>(o.imag()) - v.im.to_double()) < 1e-9);
        }
        CHECK(matched);
      }
    }
  }
}
