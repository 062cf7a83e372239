#include "nbasis/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "nbasis/errors.hpp"
#include "nbasis/lll.hpp"

namespace nbasis {

struct NumberField::Token {
  explicit Token() = default;
};

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field().get() != b.field().get()) throw DomainError("elements belong to different fields");
}

// Reduces a polynomial (coefficient vector) modulo the monic f, in place.
RationalVector reduce_mod(RationalVector c, const IntPolynomial& f) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k] == 0) continue;
    Rational lead = c[k];
    for (std::size_t i = 0; i < d; ++i) c[k - d + i] -= lead * f.coefficients()[i];
    c[k] = 0;
  }
  c.resize(d, Rational(0));
  return c;
}

}  // namespace

// ---- FieldElement ---------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, RationalVector coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw DomainError("field element without a field");
  if (coords_.size() != field_->degree()) throw DomainError("coordinate vector length differs from field degree");
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q == 0; });
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw DomainError("element is not rational");
  return coords_[0];
}

FieldElement FieldElement::operator-() const {
  RationalVector c = coords_;
  for (auto& q : c) q = -q;
  return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  RationalVector c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  RationalVector c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const std::size_t d = a.coords_.size();
  RationalVector prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
  }
  return FieldElement(a.field_, reduce_mod(std::move(prod), a.field_->defining_polynomial()));
}

FieldElement operator*(const FieldElement& a, const Rational& q) {
  RationalVector c = a.coords_;
  for (auto& x : c) x *= q;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const Rational& q) {
  RationalVector c = a.coords_;
  c[0] += q;
  return FieldElement(a.field_, std::move(c));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_.get() == b.field_.get() && a.coords_ == b.coords_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero in number field");
  const RatPolynomial f = to_rational(field_->defining_polynomial());
  ExtendedGcd g = extended_gcd(as_polynomial(), f);
  if (g.gcd.degree() > 0) {
    IntPolynomial factor = primitive_integer_multiple(g.gcd);
    throw ReducibleError("reducible defining polynomial: factor " + to_pretty_string(factor), nbasis::to_string(factor));
  }
  RationalVector c = g.s.coefficients();
  return FieldElement(field_, reduce_mod(std::move(c), field_->defining_polynomial()));
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement result = field_->one(), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << nbasis::to_string(coords_[i]);
  os << ']';
  return os.str();
}

// ---- Automorphism ------------------------------------------------------------

Automorphism::Automorphism(FieldElement image) : image_(std::move(image)) {
  const std::size_t d = image_.degree();
  power_images_ = RationalMatrix(d, d);
  FieldElement p = image_.field()->one();
  for (std::size_t k = 0; k < d; ++k) {
    power_images_.set_row(k, p.coords());
    p = p * image_;
  }
}

FieldElement Automorphism::apply(const FieldElement& a) const {
  if (a.field().get() != image_.field().get()) throw DomainError("automorphism applied to a foreign element");
  return FieldElement(a.field(), a.coords() * power_images_);
}

bool Automorphism::is_identity() const { return image_ == image_.field()->generator(); }

std::string to_string(GaloisStatus s) {
  switch (s) {
    case GaloisStatus::Galois:
      return "true";
    case GaloisStatus::NotGalois:
      return "false";
    case GaloisStatus::Indeterminate:
      break;
  }
  return "indeterminate";
}

// ---- NumberField ---------------------------------------------------------------

NumberField::NumberField(Token, IntPolynomial f, std::optional<RationalMatrix> integral_basis)
    : f_(std::move(f)), d_(static_cast<std::size_t>(f_.degree())) {
  poly_disc_ = nbasis::discriminant(f_);
  if (poly_disc_ == 0) throw InputError("defining polynomial has repeated roots");
  if (integral_basis) {
    basis_ = std::move(*integral_basis);
    basis_supplied_ = true;
  } else {
    basis_ = RationalMatrix::identity(d_);
  }
  embeddings_ = isolate_roots(f_, kDefaultPrecision);
}

EmbeddingSet NumberField::embeddings(PrecisionBits precision) const {
  EmbeddingSet e = embeddings_;
  e.refine(precision);
  return e;
}

FieldElement NumberField::element(RationalVector coords) const { return FieldElement(shared_from_this(), std::move(coords)); }

FieldElement NumberField::zero() const { return element(RationalVector(d_, Rational(0))); }

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::generator() const {
  RationalVector c(d_, Rational(0));
  c[1] = 1;
  return element(std::move(c));
}

FieldElement NumberField::from_rational(const Rational& q) const {
  RationalVector c(d_, Rational(0));
  c[0] = q;
  return element(std::move(c));
}

FieldElement NumberField::integral_basis_element(std::size_t i) const { return element(basis_.row(i)); }

FieldElement NumberField::from_integral_coordinates(const IntVector& c) const {
  if (c.size() != d_) throw DomainError("integral coordinate vector has the wrong length");
  RationalVector v(d_);
  for (std::size_t i = 0; i < d_; ++i) v[i] = Rational(static_cast<long>(c[i]));
  return element(v * basis_);
}

RationalVector NumberField::integral_coordinates(const FieldElement& a) const { return a.coords() * basis_inverse_; }

bool NumberField::automorphisms_populated() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return group_.has_value();
}

FieldPtr make_field(IntPolynomial f, std::optional<RationalMatrix> integral_basis,
                    const std::vector<RationalVector>& supplied_automorphisms) {
  if (f.degree() < 2) throw InputError("defining polynomial must have degree >= 2");
  if (f.leading() != 1) throw InputError("defining polynomial must be monic");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  if (integral_basis && (integral_basis->rows() != d || integral_basis->cols() != d))
    throw InputError("integral basis must be a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");

  auto field = std::make_shared<NumberField>(NumberField::Token{}, std::move(f), std::move(integral_basis));
  NumberField& k = *field;
  Rational det = k.basis_.determinant();
  if (det == 0) throw InputError("integral basis is singular");
  k.basis_inverse_ = k.basis_.inverse();
  Rational disc = Rational(k.poly_disc_) * det * det;
  if (disc.get_den() != 1) throw InputError("integral basis gives a non-integral discriminant " + to_string(disc));
  k.disc_ = disc.get_num();
  if (k.basis_supplied_) {
    for (std::size_t i = 0; i < d; ++i)
      if (!is_integral(k.integral_basis_element(i)))
        throw InputError("integral basis element " + std::to_string(i) + " is not an algebraic integer");
    // Z[theta] must be contained in the supplied order.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (k.basis_inverse_(i, j).get_den() != 1)
          throw InputError("integral basis does not contain the power basis");
  } else {
    Squarefree s = squarefree_status(k.poly_disc_);
    if (s == Squarefree::No)
      k.warnings_.push_back("disc(f) = " + to_string(k.poly_disc_) +
                            " is not squarefree: Z[theta] may be non-maximal; field discriminant taken as disc(f)");
    else if (s == Squarefree::Unknown)
      k.warnings_.push_back("squarefreeness of disc(f) undecided: Z[theta] may be non-maximal");
  }
  for (const auto& img : supplied_automorphisms) {
    if (img.size() != d) throw InputError("automorphism image has the wrong length");
    FieldElement sigma = k.element(img);
    FieldElement value = k.zero();
    for (std::size_t i = k.f_.size(); i-- > 0;) value = value * sigma + Rational(k.f_.coefficients()[i]);
    if (!value.is_zero())
      throw InputError("supplied automorphism theta -> " + sigma.to_string() + " does not map theta to a root of f");
    k.supplied_images_.push_back(std::move(sigma));
  }
  return field;
}

// ---- minimal polynomial, trace, norm ---------------------------------------------

IntPolynomial minimal_polynomial(const FieldElement& a) {
  const FieldPtr& k = a.field();
  const std::size_t d = k->degree();
  std::vector<RationalVector> powers{k->one().coords()};
  FieldElement p = k->one();
  for (std::size_t deg = 1; deg <= d; ++deg) {
    p = p * a;
    powers.push_back(p.coords());
    // Columns are 1, a, ..., a^deg; a kernel vector is a linear relation.
    RationalMatrix m = RationalMatrix::from_rows(powers).transpose();
    std::vector<RationalVector> ker = m.kernel();
    if (ker.empty()) continue;
    return primitive_integer_multiple(RatPolynomial(ker.front()));
  }
  throw DomainError("no linear relation among powers (degree exceeds field degree)");
}

RatPolynomial characteristic_polynomial(const FieldElement& a) {
  IntPolynomial m = minimal_polynomial(a);
  RatPolynomial monic = to_rational(m) * Rational(1 / Rational(m.leading()));
  return monic.pow(a.degree() / static_cast<std::size_t>(m.degree()));
}

TraceNorm trace_and_norm(const FieldElement& a) {
  RatPolynomial c = characteristic_polynomial(a);
  const std::size_t d = a.degree();
  Rational tr = -c.coeff(d - 1);
  Rational nm = (d % 2 == 0) ? c.coeff(0) : Rational(-c.coeff(0));
  return {tr, nm};
}

Rational trace(const FieldElement& a) { return trace_and_norm(a).trace; }

bool is_integral(const FieldElement& a) { return minimal_polynomial(a).leading() == 1; }

bool is_primitive(const FieldElement& a) {
  return static_cast<std::size_t>(minimal_polynomial(a).degree()) == a.degree();
}

// ---- automorphisms --------------------------------------------------------------

namespace {

struct Cpx {
  BigFloat re, im;
};

Cpx mul(const Cpx& a, const Cpx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

bool coords_less(const FieldElement& a, const FieldElement& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end());
}

bool maps_to_root(const FieldElement& image) {
  const FieldPtr& k = image.field();
  FieldElement value = k->zero();
  const auto& f = k->defining_polynomial();
  for (std::size_t i = f.size(); i-- > 0;) value = value * image + Rational(f.coefficients()[i]);
  return value.is_zero();
}

// Index of the root enclosure containing the image of the first root under
// theta -> image, or npos when no enclosure is hit.
std::size_t image_root_index(const FieldElement& image, const EmbeddingSet& roots) {
  ComplexInterval v = embed(image, roots, 0);
  for (std::size_t j = 0; j < roots.size(); ++j) {
    ComplexInterval r = roots.root(j);
    if (v.re.overlaps(r.re) && v.im.overlaps(r.im)) return j;
  }
  return static_cast<std::size_t>(-1);
}

// Integer relation q_0 + q_1 r + ... + q_{d-1} r^{d-1} = m s between the
// powers of the first root r and a target root s, found as a short vector of
// a scaled lattice.
std::vector<FieldElement> relation_candidates(const NumberField& k, const EmbeddingSet& roots, std::size_t target,
                                              PrecisionBits p) {
  const std::size_t d = k.degree();
  const RootEnclosure& r0 = roots.enclosure(0);
  const RootEnclosure& rt = roots.enclosure(target);
  const bool use_imag = !(r0.real && rt.real);
  const BigFloat scale = exp2(static_cast<long>(p * 3 / 4), p);
  std::vector<RealRow> rows;
  Cpx power{BigFloat(1.0, p), BigFloat(0.0, p)};
  const Cpx base{r0.center_re, r0.center_im};
  for (std::size_t i = 0; i <= d; ++i) {
    RealRow row;
    for (std::size_t j = 0; j <= d; ++j) row.emplace_back(i == j ? 1.0 : 0.0, p);
    if (i < d) {
      row.push_back(scale * power.re);
      if (use_imag) row.push_back(scale * power.im);
      power = mul(power, base);
    } else {
      row.push_back(-(scale * rt.center_re));
      if (use_imag) row.push_back(-(scale * rt.center_im));
    }
    rows.push_back(std::move(row));
  }
  LllResult red = lll_reduce(rows, 0.99, 2 * p + 64);
  std::vector<FieldElement> out;
  for (const auto& u : red.transform) {
    const Integer& m = u[d];
    if (m == 0) continue;
    RationalVector c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = Rational(u[i], m);
      c[i].canonicalize();
    }
    out.push_back(k.element(std::move(c)));
  }
  return out;
}

AutomorphismGroup recognize(const NumberField& k, const std::vector<FieldElement>& supplied, PrecisionBits start) {
  const std::size_t d = k.degree();
  AutomorphismGroup g;
  std::vector<FieldElement> images{k.generator()};
  auto add_image = [&](const FieldElement& e) {
    for (const auto& x : images)
      if (x == e) return false;
    images.push_back(e);
    return true;
  };
  for (const auto& s : supplied) add_image(s);

  const EmbeddingSet& base = k.embeddings();
  std::vector<bool> resolved(d, false);
  resolved[0] = true;
  for (std::size_t j = 1; j < d; ++j)
    if (base.enclosure(0).real != base.enclosure(j).real) resolved[j] = true;  // Q(r_0) real xor r_j real

  PrecisionBits p = std::max<PrecisionBits>(start, 64);
  g.precision_used = p;
  auto unresolved = [&] {
    return std::any_of(resolved.begin(), resolved.end(), [](bool b) { return !b; }) && images.size() < d;
  };
  while (true) {
    EmbeddingSet roots = k.embeddings(p);
    for (const auto& img : images) {
      std::size_t idx = image_root_index(img, roots);
      if (idx < d) resolved[idx] = true;
    }
    if (!unresolved()) break;
    for (std::size_t j = 1; j < d && images.size() < d; ++j) {
      if (resolved[j]) continue;
      std::vector<FieldElement> cands;
      try {
        cands = relation_candidates(k, roots, j, p);
      } catch (const PrecisionError&) {
        continue;
      }
      for (const auto& c : cands) {
        if (!maps_to_root(c)) continue;
        add_image(c);
        std::size_t idx = image_root_index(c, roots);
        if (idx < d) resolved[idx] = true;
      }
    }
    g.precision_used = p;
    if (!unresolved() || p >= kMaxPrecision) break;
    p *= 2;
  }
  if (images.size() == d) std::fill(resolved.begin(), resolved.end(), true);

  std::sort(images.begin() + 1, images.end(), coords_less);
  for (auto& img : images) g.automorphisms.emplace_back(img);
  g.complete = std::all_of(resolved.begin(), resolved.end(), [](bool b) { return b; });
  if (g.automorphisms.size() == d) {
    g.status = GaloisStatus::Galois;
  } else if (g.complete) {
    g.status = GaloisStatus::NotGalois;
  } else if (k.real_embedding_count() != 0 && k.real_embedding_count() != d) {
    g.status = GaloisStatus::NotGalois;  // Galois fields are totally real or totally imaginary
  } else if (d == 3 && !mpz_perfect_square_p(Integer(abs(k.polynomial_discriminant())).get_mpz_t())) {
    g.status = GaloisStatus::NotGalois;  // cubic: Galois iff disc is a square
  } else {
    g.status = GaloisStatus::Indeterminate;
  }
  return g;
}

}  // namespace

const AutomorphismGroup& NumberField::automorphisms(PrecisionBits precision) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!group_) group_ = recognize(*this, supplied_images_, precision);
  return *group_;
}

const AutomorphismGroup& find_automorphisms(const NumberField& k, PrecisionBits precision) {
  return k.automorphisms(precision);
}

GaloisStatus is_galois(const NumberField& k) { return k.automorphisms().status; }

std::vector<FieldElement> conjugates(const FieldElement& a) {
  const AutomorphismGroup& g = a.field()->automorphisms();
  if (g.status != GaloisStatus::Galois)
    throw NotGaloisError("field is not Galois (" + std::to_string(g.size()) + " automorphisms)");
  std::vector<FieldElement> out;
  for (const auto& s : g.automorphisms) out.push_back(s.apply(a));
  return out;
}

RationalMatrix conjugate_coordinate_matrix(const FieldElement& a) {
  std::vector<RationalVector> rows;
  for (const auto& c : conjugates(a)) rows.push_back(c.coords());
  return RationalMatrix::from_rows(rows);
}

ComplexInterval embed(const FieldElement& a, const EmbeddingSet& roots, std::size_t j) {
  const PrecisionBits p = std::max<PrecisionBits>(roots.precision() + 32, 64);
  ComplexInterval z = roots.root(j);
  ComplexInterval acc(p);
  for (std::size_t k = a.coords().size(); k-- > 0;)
    acc = acc * z + ComplexInterval(RealInterval(a.coords()[k], p), RealInterval(p));
  return acc;
}

std::vector<ComplexInterval> embed_all(const FieldElement& a, const EmbeddingSet& roots) {
  std::vector<ComplexInterval> out;
  for (std::size_t j = 0; j < roots.size(); ++j) out.push_back(embed(a, roots, j));
  return out;
}

}  // namespace nbasis
