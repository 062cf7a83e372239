#include "nbasis/lll.hpp"

#include <utility>

#include "nbasis/errors.hpp"

namespace nbasis {

namespace {

struct GramSchmidt {
  std::vector<std::vector<BigFloat>> mu;
  std::vector<BigFloat> norms;  // |b*_i|^2
};

BigFloat dot(const RealRow& a, const RealRow& b, PrecisionBits p) {
  BigFloat s(p), t(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpfr_mul(t.get(), a[i].get(), b[i].get(), MPFR_RNDN);
    mpfr_add(s.get(), s.get(), t.get(), MPFR_RNDN);
  }
  return s;
}

GramSchmidt gram_schmidt(const std::vector<RealRow>& b, PrecisionBits p) {
  const std::size_t n = b.size();
  GramSchmidt gs;
  gs.mu.assign(n, std::vector<BigFloat>(n, BigFloat(p)));
  gs.norms.assign(n, BigFloat(p));
  // r_ij = <b_i, b*_j> computed as <b_i, b_j> - sum_k mu_jk r_ik.
  std::vector<std::vector<BigFloat>> r(n, std::vector<BigFloat>(n, BigFloat(p)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      BigFloat v = dot(b[i], b[j], p);
      for (std::size_t k = 0; k < j; ++k) v = v - gs.mu[j][k] * r[i][k];
      r[i][j] = v;
      if (j < i) gs.mu[i][j] = v / gs.norms[j];
    }
    gs.norms[i] = r[i][i];
    if (gs.norms[i].sign() <= 0 || !mpfr_number_p(gs.norms[i].get()))
      throw PrecisionError("degenerate Gram-Schmidt norm in LLL");
  }
  return gs;
}

void subtract_multiple(RealRow& row, const RealRow& other, const Integer& q, PrecisionBits p) {
  BigFloat qf(q, p), t(p);
  for (std::size_t i = 0; i < row.size(); ++i) {
    mpfr_mul(t.get(), qf.get(), other[i].get(), MPFR_RNDN);
    mpfr_sub(row[i].get(), row[i].get(), t.get(), MPFR_RNDN);
  }
}

Integer round_to_integer(const BigFloat& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDN);
  return z;
}

}  // namespace

LllResult lll_reduce(const std::vector<RealRow>& rows, double delta, PrecisionBits precision) {
  if (!(delta > 0.25 && delta < 1.0)) throw DomainError("LLL delta must lie in (1/4, 1)");
  const std::size_t n = rows.size();
  LllResult res;
  res.basis = rows;
  for (auto& row : res.basis)
    for (auto& x : row) x.set_precision(precision);
  res.transform.assign(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) res.transform[i][i] = 1;
  if (n <= 1) return res;

  const BigFloat delta_f(delta, precision);
  const BigFloat half(0.5, precision);
  std::size_t k = 1;
  unsigned long guard = 0;
  GramSchmidt gs = gram_schmidt(res.basis, precision);
  while (k < n) {
    if (++guard > 1000000) throw PrecisionError("LLL did not terminate");
    // Size-reduce b_k against b_{k-1}, ..., b_0.
    bool changed = false;
    for (std::size_t j = k; j-- > 0;) {
      if (abs(gs.mu[k][j]) <= half) continue;
      Integer q = round_to_integer(gs.mu[k][j]);
      subtract_multiple(res.basis[k], res.basis[j], q, precision);
      for (std::size_t c = 0; c < n; ++c) res.transform[k][c] -= q * res.transform[j][c];
      // mu_k,i -= q mu_j,i for i < j, and mu_k,j -= q.
      BigFloat qf(q, precision);
      for (std::size_t i = 0; i < j; ++i) gs.mu[k][i] = gs.mu[k][i] - qf * gs.mu[j][i];
      gs.mu[k][j] = gs.mu[k][j] - qf;
      changed = true;
    }
    if (changed) gs = gram_schmidt(res.basis, precision);
    BigFloat lhs = gs.norms[k];
    BigFloat rhs = (delta_f - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norms[k - 1];
    if (lhs < rhs) {
      std::swap(res.basis[k], res.basis[k - 1]);
      std::swap(res.transform[k], res.transform[k - 1]);
      ++res.swaps;
      gs = gram_schmidt(res.basis, precision);
      k = k > 1 ? k - 1 : 1;
    } else {
      ++k;
    }
  }
  return res;
}

bool is_lll_reduced(const std::vector<RealRow>& rows, double delta, PrecisionBits precision) {
  if (rows.size() <= 1) return true;
  GramSchmidt gs = gram_schmidt(rows, precision);
  const BigFloat half_eps(0.5 + 1e-9, precision);
  const BigFloat delta_f(delta - 1e-9, precision);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (abs(gs.mu[i][j]) > half_eps) return false;
    BigFloat rhs = (delta_f - gs.mu[i][i - 1] * gs.mu[i][i - 1]) * gs.norms[i - 1];
    if (gs.norms[i] < rhs) return false;
  }
  return true;
}

}  // namespace nbasis
