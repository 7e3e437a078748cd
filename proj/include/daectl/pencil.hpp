#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "daectl/matrix.hpp"
#include "daectl/poly.hpp"

namespace daectl {

class DaeTriple;

/// Dense row-major matrix of rational polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);
  PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows);

  /// x * lead + constant, entrywise. Both operands must share a shape.
  static PolyMatrix linear(const RatMatrix& lead, const RatMatrix& constant);
  static PolyMatrix constant(const RatMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Poly p);

  /// Largest entry degree; 0 when every entry is the zero polynomial.
  std::size_t degree_bound() const noexcept { return degree_bound_; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  void refresh_degree_bound();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
  std::size_t degree_bound_ = 0;
};

PolyMatrix hconcat(const PolyMatrix& lhs, const PolyMatrix& rhs);
PolyMatrix submatrix(const PolyMatrix& pm, const IndexSelection& sel);

/// The l x (n+m) pencil [xE - A, B].
PolyMatrix build_pencil(const DaeTriple& t);

/// Entrywise evaluation at x0.
RatMatrix eval(const PolyMatrix& pm, const Rational& x0);

/// Determinant in Q[x] by fraction-free elimination with exact division.
Poly det(const PolyMatrix& pm);

/// Rank over the rational-function field Q(x).
///
/// Each d x d minor has degree at most d * degree_bound(), so a nonzero minor
/// cannot vanish at all of degree_bound() * min(rows, cols) + 1 distinct
/// points; the largest evaluated rank over those points is the generic rank.
std::size_t generic_rank(const PolyMatrix& pm);

/// Monic gcd of all order-r minors; zero when all of them vanish
/// identically. Stops as soon as the running gcd is a nonzero constant.
Poly minor_gcd(const PolyMatrix& pm, std::size_t r);

/// rank pm(lambda) >= d for every complex lambda.
bool rank_everywhere_ge(const PolyMatrix& pm, std::size_t d);

/// rank pm(lambda) >= d for every lambda with Re(lambda) >= 0.
bool rank_on_closed_rhp_ge(const PolyMatrix& pm, std::size_t d);

}  // namespace daectl
