#ifndef NBASIS_MATRIX_HPP
#define NBASIS_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "nbasis/rational.hpp"

namespace nbasis {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  RationalVector row(std::size_t i) const;
  void set_row(std::size_t i, const RationalVector& v);

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  Rational determinant() const;
  std::size_t rank() const;
  /// Right kernel {x : M x = 0}, one vector per free column of the reduced
  /// row echelon form, with a 1 in that free column.
  std::vector<RationalVector> kernel() const;
  /// Throws DomainError when singular.
  RationalMatrix inverse() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct KernelAndDet {
  std::optional<Rational> determinant;  // empty for non-square input
  std::vector<RationalVector> kernel;
};
KernelAndDet kernel_and_det(const RationalMatrix& m);

/// Row vector times matrix.
RationalVector operator*(const RationalVector& v, const RationalMatrix& m);

}  // namespace nbasis

#endif
