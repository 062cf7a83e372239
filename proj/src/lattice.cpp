#include "nbasis/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "nbasis/errors.hpp"

namespace nbasis {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

RealInterval interval_determinant(IntervalMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return RealInterval(Integer(1), kDefaultPrecision);
  RealInterval det = RealInterval(Integer(1), m[0][0].precision());
  bool negate = false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(m[r][c]).lower() > abs(m[piv][c]).lower()) piv = r;
    if (m[piv][c].contains_zero()) throw PrecisionError("interval pivot contains zero");
    if (piv != c) {
      std::swap(m[piv], m[c]);
      negate = !negate;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      RealInterval factor = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] = m[r][j] - factor * m[c][j];
    }
    det = det * m[c][c];
  }
  return negate ? -det : det;
}

IntervalMatrix interval_inverse(const IntervalMatrix& a) {
  const std::size_t n = a.size();
  const PrecisionBits p = a[0][0].precision();
  IntervalMatrix m = a;
  IntervalMatrix inv(n, std::vector<RealInterval>(n, RealInterval(p)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = RealInterval(Integer(1), p);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(m[r][c]).lower() > abs(m[piv][c]).lower()) piv = r;
    if (m[piv][c].contains_zero()) throw PrecisionError("interval pivot contains zero");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    RealInterval pivot = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] = m[c][j] / pivot;
      inv[c][j] = inv[c][j] / pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      RealInterval factor = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] = m[r][j] - factor * m[c][j];
        inv[r][j] = inv[r][j] - factor * inv[c][j];
      }
    }
  }
  return inv;
}

MinkowskiLattice minkowski_lattice(const NumberField& k, PrecisionBits precision) {
  if (!k.is_totally_real()) throw DomainError("not totally real");
  const std::size_t d = k.degree();
  const Integer abs_disc = abs(k.discriminant());
  MinkowskiLattice lat;
  lat.field = k.shared_from_this();
  for (std::size_t j = 0; j < d; ++j) lat.basis_elements.push_back(k.integral_basis_element(j));
  for (PrecisionBits p = precision;; p *= 2) {
    EmbeddingSet roots = k.embeddings(p);
    lat.embedding.assign(d, std::vector<RealInterval>());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) lat.embedding[i].push_back(embed(lat.basis_elements[j], roots, i).re);
    lat.precision = p;
    RealInterval target = sqrt(RealInterval(abs_disc, p + 32));
    try {
      lat.det = abs(interval_determinant(lat.embedding));
      if (lat.det.contains(target)) return lat;
      if (p >= kMaxPrecision && lat.det.overlaps(target)) return lat;
    } catch (const PrecisionError&) {
      if (p >= kMaxPrecision) throw;
    }
    if (p >= kMaxPrecision)
      throw DomainError("Minkowski determinant does not enclose |disc|^(1/2): wrong integral basis?");
  }
}

LatticeVector lattice_vector(const FieldElement& a, const EmbeddingSet& roots) {
  LatticeVector v{a, a.field()->integral_coordinates(a), {}, RealInterval(roots.precision())};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    RealInterval x = embed(a, roots, i).re;
    RealInterval m = abs(x);
    v.sup_norm = i == 0 ? m : RealInterval(std::max(v.sup_norm.lower(), m.lower()), std::max(v.sup_norm.upper(), m.upper()));
    v.values.push_back(std::move(x));
  }
  return v;
}

ReducedLattice lll_reduce(const MinkowskiLattice& lattice, double delta) {
  const std::size_t d = lattice.basis_elements.size();
  std::vector<RealRow> rows(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) rows[j].push_back(lattice.embedding[i][j].midpoint());
  LllResult red;
  for (PrecisionBits p = lattice.precision;; p *= 2) {
    try {
      red = nbasis::lll_reduce(rows, delta, p);
      break;
    } catch (const PrecisionError&) {
      if (p >= kMaxPrecision) throw;
    }
  }
  ReducedLattice out;
  out.transform = red.transform;
  out.swaps = red.swaps;
  EmbeddingSet roots = lattice.field->embeddings(lattice.precision);
  for (std::size_t r = 0; r < d; ++r) {
    FieldElement e = lattice.field->zero();
    for (std::size_t j = 0; j < d; ++j)
      if (red.transform[r][j] != 0) e = e + lattice.basis_elements[j] * Rational(red.transform[r][j]);
    out.vectors.push_back(lattice_vector(e, roots));
  }
  return out;
}

namespace {

IntVector integer_coordinates(const RationalVector& c) {
  IntVector out;
  for (const auto& q : c) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw DomainError("coordinate is not a small integer");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

void normalize_sign(LatticeVector& v) {
  for (std::size_t i = v.coordinates.size(); i-- > 0;) {
    if (v.coordinates[i] == 0) continue;
    if (v.coordinates[i] < 0) {
      v.element = -v.element;
      for (auto& c : v.coordinates) c = -c;
      for (auto& x : v.values) x = -x;
    }
    return;
  }
}

void sort_lattice_vectors(std::vector<LatticeVector>& vs) {
  std::stable_sort(vs.begin(), vs.end(), [](const LatticeVector& a, const LatticeVector& b) {
    return a.sup_norm.midpoint() < b.sup_norm.midpoint();
  });
  // Runs of overlapping enclosures are ties; order them by small-first keys.
  std::size_t start = 0;
  while (start < vs.size()) {
    std::size_t end = start + 1;
    while (end < vs.size() && vs[end - 1].sup_norm.overlaps(vs[end].sup_norm)) ++end;
    std::stable_sort(vs.begin() + start, vs.begin() + end, [](const LatticeVector& a, const LatticeVector& b) {
      return colex_key_less(integer_coordinates(a.coordinates), integer_coordinates(b.coordinates));
    });
    start = end;
  }
}

}  // namespace

std::optional<std::vector<LatticeVector>> enumerate_lattice(const MinkowskiLattice& lattice,
                                                            const ReducedLattice& reduced, const BigFloat& radius,
                                                            std::uint64_t max_points) {
  const std::size_t d = reduced.vectors.size();
  const PrecisionBits p = lattice.precision + 32;
  IntervalMatrix w(d);
  for (std::size_t r = 0; r < d; ++r) w[r] = reduced.vectors[r].values;
  IntervalMatrix winv = interval_inverse(w);
  // v = c W, so c_r = sum_i v_i Winv[i][r] and |c_r| <= radius * sum_i |Winv[i][r]|.
  RealInterval rad = RealInterval::point(radius);
  std::vector<std::int64_t> bound(d);
  double count = 1;
  for (std::size_t r = 0; r < d; ++r) {
    RealInterval s(p);
    for (std::size_t i = 0; i < d; ++i) s = s + abs(winv[i][r]);
    BigFloat b = (rad * s).upper();
    double bd = std::floor(b.to_double() * (1 + 1e-12));
    if (!(bd < 1e9)) return std::nullopt;
    bound[r] = static_cast<std::int64_t>(bd);
    count *= static_cast<double>(2 * bound[r] + 1);
  }
  if (count > static_cast<double>(max_points)) return std::nullopt;

  std::vector<std::vector<double>> wd(d, std::vector<double>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i < d; ++i) wd[r][i] = w[r][i].to_double();
  const double rd = radius.to_double();
  const double slack = 1e-6 * std::max(1.0, rd);

  EmbeddingSet roots = lattice.field->embeddings(lattice.precision);
  std::vector<LatticeVector> out;
  IntVector c(d);
  for (std::size_t r = 0; r < d; ++r) c[r] = -bound[r];
  while (true) {
    // One vector per +/- pair: last nonzero coordinate positive.
    std::size_t last = d;
    for (std::size_t r = d; r-- > 0;)
      if (c[r] != 0) {
        last = r;
        break;
      }
    if (last < d && c[last] > 0) {
      bool keep = true;
      for (std::size_t i = 0; i < d && keep; ++i) {
        double v = 0;
        for (std::size_t r = 0; r < d; ++r) v += static_cast<double>(c[r]) * wd[r][i];
        if (std::fabs(v) > rd + slack) keep = false;
      }
      if (keep) {
        FieldElement e = lattice.field->zero();
        for (std::size_t r = 0; r < d; ++r)
          if (c[r] != 0) e = e + reduced.vectors[r].element * Rational(static_cast<long>(c[r]));
        LatticeVector v = lattice_vector(e, roots);
        if (v.sup_norm.lower() <= radius) {
          normalize_sign(v);
          out.push_back(std::move(v));
        }
      }
    }
    std::size_t r = 0;
    while (r < d && c[r] == bound[r]) {
      c[r] = -bound[r];
      ++r;
    }
    if (r == d) break;
    ++c[r];
  }
  sort_lattice_vectors(out);
  return out;
}

MinimaResult supnorm_minima(const MinkowskiLattice& lattice, std::size_t degree_cap) {
  const std::size_t d = lattice.basis_elements.size();
  MinimaResult res;
  res.reduced = lll_reduce(lattice);
  const ReducedLattice& reduced = res.reduced;
  auto fallback = [&] {
    res.exact = false;
    res.vectors = reduced.vectors;
    for (auto& v : res.vectors) normalize_sign(v);
    sort_lattice_vectors(res.vectors);
    for (const auto& v : res.vectors) res.minima.push_back(v.sup_norm);
    return res;
  };
  if (d > degree_cap) return fallback();
  BigFloat radius = reduced.vectors[0].sup_norm.upper();
  for (const auto& v : reduced.vectors)
    if (v.sup_norm.upper() > radius) radius = v.sup_norm.upper();
  auto all = enumerate_lattice(lattice, reduced, radius);
  if (!all) return fallback();
  res.points_enumerated = all->size();
  std::vector<RationalVector> chosen;
  for (const auto& v : *all) {
    chosen.push_back(v.coordinates);
    if (RationalMatrix::from_rows(chosen).rank() < chosen.size()) {
      chosen.pop_back();
      continue;
    }
    res.vectors.push_back(v);
    res.minima.push_back(v.sup_norm);
    if (res.vectors.size() == d) break;
  }
  if (res.vectors.size() < d) return fallback();
  return res;
}

IndependenceVerdict dubickas_independence(const FieldElement& a) {
  const std::size_t d = a.degree();
  if (!is_prime(d)) throw DomainError("independence criterion needs prime degree, got " + std::to_string(d));
  RationalMatrix m = conjugate_coordinate_matrix(a);
  IndependenceVerdict v;
  v.det = m.determinant();
  if (v.det != 0) {
    v.independent = true;
    return v;
  }
  if (trace(a) == 0) {
    v.witness = RationalVector(d, Rational(1));
  } else {
    std::vector<RationalVector> ker = m.transpose().kernel();
    if (!ker.empty()) v.witness = ker.front();
  }
  return v;
}

NormalBasisCertificate lattice_normal_basis(const NumberField& k, PrecisionBits precision) {
  const std::size_t d = k.degree();
  if (d < 3 || !is_prime(d))
    throw DispatchError("lattice method needs an odd prime degree (got " + std::to_string(d) +
                        "); use the artin or quadratic method");
  const AutomorphismGroup& g = k.automorphisms(precision);
  if (g.status != GaloisStatus::Galois)
    throw NotGaloisError("not Galois (" + std::to_string(g.size()) + " automorphism" + (g.size() == 1 ? "" : "s") +
                         ")");
  MinkowskiLattice lat = minkowski_lattice(k, precision);
  MinimaResult minima = supnorm_minima(lat);

  std::int64_t tested = 0;
  auto qualifies = [&](const FieldElement& a) {
    ++tested;
    return !a.is_rational() && trace(a) != 0 && is_primitive(a);
  };
  std::optional<FieldElement> beta;
  std::string selection;
  for (const auto& v : minima.vectors)
    if (qualifies(v.element)) {
      beta = v.element;
      selection = "minima";
      break;
    }
  if (!beta) {
    for (const auto& v : minima.vectors) {
      if (v.element.is_rational() || trace(v.element) != 0) continue;
      FieldElement shifted = v.element + Rational(1);
      if (qualifies(shifted)) {
        beta = shifted;
        selection = "minima-shift";
        break;
      }
    }
  }
  std::int64_t enumerated = static_cast<std::int64_t>(minima.points_enumerated);
  if (!beta) {
    const ReducedLattice& reduced = minima.reduced;
    BigFloat radius = minima.minima.back().upper();
    for (int round = 0; round < 8 && !beta; ++round) {
      radius = radius * BigFloat(2.0, radius.precision());
      auto pts = enumerate_lattice(lat, reduced, radius);
      if (!pts) break;
      enumerated += static_cast<std::int64_t>(pts->size());
      for (const auto& v : *pts) {
        if (qualifies(v.element)) {
          beta = v.element;
        } else if (!v.element.is_rational() && trace(v.element) == 0 && qualifies(v.element + Rational(1))) {
          beta = v.element + Rational(1);
        }
        if (beta) break;
      }
    }
    selection = "enumeration";
  }
  if (!beta) throw SearchExhausted("search exhausted: no primitive lattice vector with nonzero trace found");

  NormalBasisCertificate c = make_certificate(Method::Lattice, *beta, precision);
  const Integer abs_disc = abs(k.discriminant());
  c.bound = sqrt_discriminant_check("sqrt_abs_disc", abs_disc, height_of(*beta), precision);
  c.satisfied = verdict_at_most(c.bound.comparison);

  FieldElement b = *beta;
  Refinable sup = [b](PrecisionBits p) { return lattice_vector(b, b.field()->embeddings(p)).sup_norm; };
  LatticeVector bv = lattice_vector(b, k.embeddings(precision));
  c.extra_bounds.push_back(sqrt_discriminant_check("sup_norm_shortcut", abs_disc, sup, precision));
  c.extra_bounds.push_back(BoundCheck{"height_le_sup_norm", std::nullopt, bv.sup_norm,
                                      certified_compare(height_of(b), sup, precision)});

  LatticeSummary s{lat.det, minima.minima, {}, minima.exact, selection, bv.sup_norm};
  for (const auto& v : minima.vectors) s.minima_preimages.push_back(v.element);
  c.lattice = std::move(s);
  c.stats.add("lll_swaps", minima.reduced.swaps);
  c.stats.add("lattice_points_enumerated", enumerated);
  c.stats.add("candidates_tested", tested);
  if (!minima.exact) c.notes.push_back("successive minima not certified optimal (LLL fallback)");
  return c;
}

}  // namespace nbasis
