#ifndef NBASIS_NUMBER_FIELD_HPP
#define NBASIS_NUMBER_FIELD_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nbasis/box_search.hpp"
#include "nbasis/interval.hpp"
#include "nbasis/matrix.hpp"
#include "nbasis/polynomial.hpp"
#include "nbasis/roots.hpp"

namespace nbasis {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of K = Q[x]/(f), stored by its power-basis coordinates.
class FieldElement {
 public:
  FieldElement(FieldPtr field, RationalVector coords);

  const FieldPtr& field() const noexcept { return field_; }
  const RationalVector& coords() const noexcept { return coords_; }
  std::size_t degree() const noexcept { return coords_.size(); }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws DomainError unless the element lies in Q.
  Rational rational_value() const;
  RatPolynomial as_polynomial() const { return RatPolynomial(coords_); }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& q);
  friend FieldElement operator+(const FieldElement& a, const Rational& q);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Inverse through the extended gcd with f. Throws DomainError on zero and
  /// ReducibleError if gcd(f, a) is nonconstant.
  FieldElement inverse() const;
  FieldElement pow(unsigned long e) const;

  /// "[c0, c1, ...]"
  std::string to_string() const;

 private:
  FieldPtr field_;
  RationalVector coords_;
};

/// Field embedding, recorded as the exact image of the generator.
class Automorphism {
 public:
  explicit Automorphism(FieldElement image);
  const FieldElement& image_of_generator() const noexcept { return image_; }
  FieldElement apply(const FieldElement& a) const;
  bool is_identity() const;

 private:
  FieldElement image_;
  RationalMatrix power_images_;  // row k = coordinates of image^k
};

enum class GaloisStatus { Galois, NotGalois, Indeterminate };
std::string to_string(GaloisStatus s);

struct AutomorphismGroup {
  std::vector<Automorphism> automorphisms;  // identity first, then lexicographic by coordinates
  /// Every root of f was either matched by an exactly verified automorphism or
  /// excluded by a certified argument.
  bool complete = true;
  GaloisStatus status = GaloisStatus::Indeterminate;
  PrecisionBits precision_used = 0;
  std::size_t size() const noexcept { return automorphisms.size(); }
};

class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  struct Token;  // restricts construction to make_field
  NumberField(Token, IntPolynomial f, std::optional<RationalMatrix> integral_basis);

  const IntPolynomial& defining_polynomial() const noexcept { return f_; }
  std::size_t degree() const noexcept { return d_; }
  /// Signed field discriminant (disc(f) times det(integral basis)^2).
  const Integer& discriminant() const noexcept { return disc_; }
  const Integer& polynomial_discriminant() const noexcept { return poly_disc_; }
  /// Rows are the basis elements in power-basis coordinates.
  const RationalMatrix& integral_basis() const noexcept { return basis_; }
  bool has_supplied_integral_basis() const noexcept { return basis_supplied_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  bool is_totally_real() const noexcept { return embeddings_.totally_real(); }
  std::size_t real_embedding_count() const noexcept { return embeddings_.real_root_count(); }
  /// Roots of f at the default precision, in EmbeddingSet order.
  const EmbeddingSet& embeddings() const noexcept { return embeddings_; }
  EmbeddingSet embeddings(PrecisionBits precision) const;

  FieldElement element(RationalVector coords) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement integral_basis_element(std::size_t i) const;
  FieldElement from_integral_coordinates(const IntVector& c) const;
  RationalVector integral_coordinates(const FieldElement& a) const;

  /// Automorphisms, recognized on first use (thread-safe, idempotent).
  const AutomorphismGroup& automorphisms(PrecisionBits precision = kDefaultPrecision) const;
  bool automorphisms_populated() const;

 private:
  friend FieldPtr make_field(IntPolynomial, std::optional<RationalMatrix>, const std::vector<RationalVector>&);
  IntPolynomial f_;
  std::size_t d_;
  Integer poly_disc_, disc_;
  RationalMatrix basis_, basis_inverse_;
  bool basis_supplied_ = false;
  std::vector<std::string> warnings_;
  EmbeddingSet embeddings_;
  std::vector<FieldElement> supplied_images_;
  mutable std::mutex mutex_;
  mutable std::optional<AutomorphismGroup> group_;
};

/// Builds K = Q[x]/(f). Throws InputError when f is not monic, has degree < 2
/// or repeated roots, or the integral basis is malformed or non-integral.
/// Supplied automorphisms (power-basis coordinates of sigma(theta)) are
/// verified exactly: f(sigma(theta)) = 0 in K.
FieldPtr make_field(IntPolynomial f, std::optional<RationalMatrix> integral_basis = std::nullopt,
                    const std::vector<RationalVector>& supplied_automorphisms = {});

/// Lowest-degree primitive integer polynomial (positive leading coefficient)
/// annihilating a.
IntPolynomial minimal_polynomial(const FieldElement& a);
/// minpoly^(d / deg), made monic.
RatPolynomial characteristic_polynomial(const FieldElement& a);

struct TraceNorm {
  Rational trace;
  Rational norm;
};
TraceNorm trace_and_norm(const FieldElement& a);
Rational trace(const FieldElement& a);
bool is_integral(const FieldElement& a);
bool is_primitive(const FieldElement& a);

/// Recognizes each root of f as a polynomial in the first root by integer
/// relation search, accepting only exactly verified candidates. Retries with
/// doubled precision up to kMaxPrecision.
const AutomorphismGroup& find_automorphisms(const NumberField& k, PrecisionBits precision = kDefaultPrecision);
GaloisStatus is_galois(const NumberField& k);

/// sigma_i(a) for every stored automorphism, in group order. Throws
/// NotGaloisError unless the field is Galois.
std::vector<FieldElement> conjugates(const FieldElement& a);
/// Rows are the power-basis coordinates of the conjugates of a.
RationalMatrix conjugate_coordinate_matrix(const FieldElement& a);

/// Value of a under the j-th embedding (root j of f in `roots`).
ComplexInterval embed(const FieldElement& a, const EmbeddingSet& roots, std::size_t j);
std::vector<ComplexInterval> embed_all(const FieldElement& a, const EmbeddingSet& roots);

}  // namespace nbasis

#endif
