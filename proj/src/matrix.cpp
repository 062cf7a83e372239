#include "nbasis/matrix.hpp"

#include <utility>

#include "nbasis/errors.hpp"

namespace nbasis {

namespace {

// Fraction-free (Bareiss) forward elimination of an integer matrix. On
// return `m` is in row echelon form; `pivots` lists the pivot columns and
// `sign` tracks row swaps. For a square nonsingular input the last pivot
// equals sign * det.
struct Echelon {
  std::vector<std::vector<Integer>> m;
  std::vector<std::size_t> pivots;
  int sign = 1;
};

Echelon bareiss(std::vector<std::vector<Integer>> m, std::size_t cols) {
  Echelon e;
  const std::size_t rows = m.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

// Scales each row to integers; returns the product of the scale factors.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& a, Integer& scale) {
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
  scale = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RationalVector row = a.row(i);
    Integer l = common_denominator(row);
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Integer(row[j] * l);
    scale *= l;
  }
  return m;
}

}  // namespace

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

void RationalMatrix::set_row(std::size_t i, const RationalVector& v) {
  if (v.size() != cols_) throw DomainError("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

RationalVector operator*(const RationalVector& v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw DomainError("vector/matrix shape mismatch");
  RationalVector r(m.cols(), Rational(0));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[k] * m(k, j);
  }
  return r;
}

Rational RationalMatrix::determinant() const {
  if (!is_square()) throw DomainError("determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  Integer scale;
  Echelon e = bareiss(integer_rows(*this, scale), cols_);
  if (e.pivots.size() < rows_) return 0;
  Rational d(e.m[rows_ - 1][cols_ - 1] * e.sign, scale);
  d.canonicalize();
  return d;
}

std::size_t RationalMatrix::rank() const {
  Integer scale;
  return bareiss(integer_rows(*this, scale), cols_).pivots.size();
}

std::vector<RationalVector> RationalMatrix::kernel() const {
  Integer scale;
  Echelon e = bareiss(integer_rows(*this, scale), cols_);
  const std::size_t r = e.pivots.size();
  // Back substitution to reduced row echelon form over Q.
  std::vector<RationalVector> rref(r, RationalVector(cols_));
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = e.pivots[i];
    for (std::size_t j = 0; j < cols_; ++j) rref[i][j] = Rational(e.m[i][j], e.m[i][pc]);
    for (auto& x : rref[i]) x.canonicalize();
    for (std::size_t k = i + 1; k < r; ++k) {
      const std::size_t kc = e.pivots[k];
      Rational f = rref[i][kc];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) rref[i][j] -= f * rref[k][j];
    }
  }
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r; ++i) v[e.pivots[i]] = -rref[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix RationalMatrix::inverse() const {
  if (!is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this, inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw DomainError("singular matrix has no inverse");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational piv = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= piv;
      inv(c, j) *= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

KernelAndDet kernel_and_det(const RationalMatrix& m) {
  KernelAndDet r;
  if (m.is_square()) r.determinant = m.determinant();
  r.kernel = m.kernel();
  return r;
}

}  // namespace nbasis
