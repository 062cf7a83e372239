#ifndef NBASIS_CERTIFICATE_HPP
#define NBASIS_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nbasis/box_search.hpp"
#include "nbasis/heights.hpp"
#include "nbasis/number_field.hpp"

namespace nbasis {

enum class Method { Artin, Lattice, Quadratic };
std::string to_string(Method m);

enum class Verdict { True, False, Inconclusive };
std::string to_string(Verdict v);
/// Less or Equal -> True, Greater -> False.
Verdict verdict_at_most(Comparison c);

/// One "h(beta) <= bound" check. `exact` is set when the bound is rational;
/// `enclosure` always encloses the bound.
struct BoundCheck {
  std::string name;
  std::optional<Rational> exact;
  RealInterval enclosure;
  Comparison comparison = Comparison::Inconclusive;
  /// Reported but not part of `satisfied`.
  bool informational = false;
};

/// |Delta|^(1/2), exact when |Delta| is a perfect square.
BoundCheck sqrt_discriminant_check(const std::string& name, const Integer& abs_disc, const Refinable& value,
                                   PrecisionBits precision);

struct ArtinSearchState {
  FieldElement theta;
  IntVector xi;
  FieldElement alpha;
  Integer eval_point;
};

struct LatticeSummary {
  RealInterval det_enclosure;
  std::vector<RealInterval> minima;
  std::vector<FieldElement> minima_preimages;
  bool exact_minima = true;
  /// "minima", "minima-shift" or "enumeration"
  std::string selection;
  RealInterval sup_norm;
};

struct SearchStats {
  std::vector<std::pair<std::string, std::int64_t>> counters;
  void add(const std::string& key, std::int64_t value) { counters.emplace_back(key, value); }
};

struct NormalBasisCertificate {
  Method method = Method::Artin;
  FieldElement beta;
  std::vector<FieldElement> basis;  // sigma_i(beta) in automorphism order
  Rational det_witness;
  HeightReport height;              // shared by every basis element
  BoundCheck bound;
  std::vector<BoundCheck> extra_bounds;
  Verdict satisfied = Verdict::Inconclusive;
  std::optional<ArtinSearchState> artin;
  std::optional<LatticeSummary> lattice;
  /// Quadratic path: h / (c * |Delta|^(1/4)) for the configured constant c.
  std::optional<RealInterval> height_ratio;
  std::optional<Rational> ratio_constant;
  SearchStats stats;
  std::vector<std::string> notes;
};

/// Builds basis, determinant witness and height for beta. Throws
/// NotGaloisError for non-Galois fields and DomainError if the conjugates are
/// dependent.
NormalBasisCertificate make_certificate(Method method, const FieldElement& beta, PrecisionBits precision);

}  // namespace nbasis

#endif
