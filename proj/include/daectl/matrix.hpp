#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "daectl/rational.hpp"

namespace daectl {

/// Dense row-major matrix over the rationals.
///
/// Matrices with zero rows or zero columns are ordinary values; a kernel
/// basis of an injective map is an n x 0 matrix, and hconcat treats an
/// l x 0 block as the identity element.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t n);
  static RatMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// n x 1 canonical unit vector e_{index+1}.
  static RatMatrix unit_column(std::size_t n, std::size_t index);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(entries_).subspan(i * cols_, cols_);
  }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  RatMatrix col(std::size_t j) const;
  RatMatrix transpose() const;
  bool is_zero() const;

  RatMatrix& operator*=(const Rational& s);
  friend RatMatrix operator*(RatMatrix m, const Rational& s) { return m *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix m) { return m *= s; }
  friend RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
  friend RatMatrix operator+(const RatMatrix& lhs, const RatMatrix& rhs);
  friend RatMatrix operator-(const RatMatrix& lhs, const RatMatrix& rhs);
  RatMatrix operator-() const { return *this * Rational(-1); }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Row and column picks of a submatrix; 0-based and strictly increasing.
struct IndexSelection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  friend bool operator==(const IndexSelection&, const IndexSelection&) = default;
};

/// Column-wise concatenation [M1, M2, ...]. All blocks need the same row count.
RatMatrix hconcat(std::span<const RatMatrix> blocks);
RatMatrix hconcat(std::initializer_list<RatMatrix> blocks);
/// Row-wise stacking [M1; M2; ...].
RatMatrix vconcat(std::span<const RatMatrix> blocks);
RatMatrix vconcat(std::initializer_list<RatMatrix> blocks);

RatMatrix submatrix(const RatMatrix& m, const IndexSelection& sel);

/// Determinant by fraction-free (Bareiss) elimination; det of 0x0 is 1.
Rational det(const RatMatrix& m);

/// Determinant by Laplace expansion along the first row. Exponential;
/// exists as an algorithmically independent reference for small sizes.
Rational det_laplace(const RatMatrix& m);

/// det(submatrix(m, sel)); a minor of degree 0 is 1.
Rational minor(const RatMatrix& m, const IndexSelection& sel);

/// Exact rank via pivoted fraction-free elimination.
std::size_t rank(const RatMatrix& m);

/// Largest d with a nonzero d x d minor, found by enumerating all minors and
/// evaluating each with det_laplace. Reference implementation for rank().
std::size_t rank_by_minors(const RatMatrix& m);

/// Reduced row-echelon form (leftmost nonzero pivot, unit pivots).
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};
RowEchelon reduced_row_echelon(const RatMatrix& m);

/// Basis of ker m as the columns of a cols(m) x (cols(m) - rank m) matrix.
RatMatrix kernel_basis(const RatMatrix& m);

/// Inverse of a square nonsingular matrix. Throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);

/// All C(rows,d) * C(cols,d) selections of order d; row picks vary slowest,
/// both in lexicographic order.
std::vector<IndexSelection> enumerate_selections(std::size_t rows, std::size_t cols, std::size_t d);

/// All strictly increasing d-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t d);

}  // namespace daectl
