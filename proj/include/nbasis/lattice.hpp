#ifndef NBASIS_LATTICE_HPP
#define NBASIS_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "nbasis/certificate.hpp"
#include "nbasis/lll.hpp"

namespace nbasis {

using IntervalMatrix = std::vector<std::vector<RealInterval>>;

/// Interval Gaussian elimination with partial pivoting on the largest lower
/// magnitude. Throws PrecisionError when every pivot candidate contains 0.
RealInterval interval_determinant(IntervalMatrix m);
IntervalMatrix interval_inverse(const IntervalMatrix& m);

struct MinkowskiLattice {
  FieldPtr field;
  std::vector<FieldElement> basis_elements;
  /// entry (i, j) = sigma_i(basis element j)
  IntervalMatrix embedding;
  RealInterval det;  // |det(embedding)|
  PrecisionBits precision = kDefaultPrecision;
};

/// Throws DomainError("not totally real") for fields with complex roots and
/// when |det| fails to enclose |Delta|^(1/2) even after escalation.
MinkowskiLattice minkowski_lattice(const NumberField& k, PrecisionBits precision = kDefaultPrecision);

/// A lattice vector with its exact preimage.
struct LatticeVector {
  FieldElement element;
  RationalVector coordinates;        // integral-basis coordinates
  std::vector<RealInterval> values;  // sigma_i(element)
  RealInterval sup_norm;
};

LatticeVector lattice_vector(const FieldElement& a, const EmbeddingSet& roots);

struct ReducedLattice {
  std::vector<LatticeVector> vectors;
  IntegerMatrix transform;  // reduced element r = sum_j transform[r][j] * basis_element j
  unsigned swaps = 0;
};

/// LLL on interval midpoints; the unimodular transform is applied exactly to
/// the preimages and the embeddings are recomputed from them. Retries with
/// doubled precision on Gram-Schmidt degeneracy.
ReducedLattice lll_reduce(const MinkowskiLattice& lattice, double delta = 0.99);

/// All nonzero lattice vectors with sup-norm lower end <= radius, one per +/-
/// pair (sign fixed so the last nonzero integral coordinate is positive),
/// ordered by sup-norm with overlapping enclosures ordered by small-first
/// coordinates. Nullopt when the certified coefficient box exceeds
/// `max_points`.
std::optional<std::vector<LatticeVector>> enumerate_lattice(const MinkowskiLattice& lattice,
                                                            const ReducedLattice& reduced, const BigFloat& radius,
                                                            std::uint64_t max_points = 4000000);

struct MinimaResult {
  std::vector<LatticeVector> vectors;
  std::vector<RealInterval> minima;
  bool exact = true;
  std::uint64_t points_enumerated = 0;
  ReducedLattice reduced;
};

/// Successive minima for the sup-norm. Above `degree_cap` or when the box is
/// too large, the LLL vectors are returned with exact = false.
MinimaResult supnorm_minima(const MinkowskiLattice& lattice, std::size_t degree_cap = 8);

struct IndependenceVerdict {
  bool independent = false;
  Rational det;
  /// Left-kernel vector of the conjugate matrix when dependent.
  std::optional<RationalVector> witness;
};

/// Exact conjugate independence in a Galois field of prime degree. Throws
/// DomainError for non-prime degree.
IndependenceVerdict dubickas_independence(const FieldElement& a);

/// Throws DispatchError unless the degree is an odd prime, NotGaloisError for
/// non-Galois input.
NormalBasisCertificate lattice_normal_basis(const NumberField& k, PrecisionBits precision = kDefaultPrecision);

struct QuadraticOptions {
  Rational ratio_constant = 1;
  PrecisionBits precision = kDefaultPrecision;
};

/// Minimum-height primitive integral element with nonzero trace. Throws
/// DispatchError unless d = 2.
NormalBasisCertificate quadratic_normal_basis(const NumberField& k, const QuadraticOptions& options = {});

bool is_prime(std::size_t n);

}  // namespace nbasis

#endif
