#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "daectl/matrix.hpp"
#include "daectl/rational.hpp"

namespace daectl {

/// Degree of a polynomial; std::nullopt stands for the degree of the zero
/// polynomial (minus infinity).
using Degree = std::optional<std::size_t>;

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// The highest stored coefficient is nonzero; the zero polynomial stores none.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c) { return Poly({c}); }
  /// c * x^k
  static Poly monomial(const Rational& c, std::size_t k);
  /// x - root
  static Poly linear_factor(const Rational& root) { return Poly({-root, Rational(1)}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Degree degree() const noexcept;

  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

  /// Scaled to leading coefficient 1; the zero polynomial stays zero.
  Poly monic() const;

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Rational& s) { return lhs *= s; }
  friend Poly operator*(const Rational& s, Poly rhs) { return rhs *= s; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  Poly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws DomainError for b = 0.
PolyDivision divmod(const Poly& a, const Poly& b);

/// a / b when b divides a; throws DomainError on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);

/// Horner evaluation.
Rational poly_eval(const Poly& p, const Rational& x0);

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

/// Sylvester matrix of nonzero p (degree n) and q (degree m), of size
/// (n+m) x (n+m): m shifted coefficient columns of p followed by n shifted
/// coefficient columns of q, coefficients ascending downwards.
RatMatrix sylvester(const Poly& p, const Poly& q);

/// det(sylvester(p, q)); 1 for two nonzero constants.
Rational resultant(const Poly& p, const Poly& q);

/// The n x n Hurwitz matrix of p: row 2k holds p1, p3, p5, ... shifted k
/// places right, row 2k+1 holds p0, p2, p4, ... shifted k places right.
RatMatrix hurwitz_matrix(const Poly& p);

/// True iff every complex root of p lies in the open left half-plane.
/// Nonzero constants have no roots and count as stable.
bool hurwitz_stable(const Poly& p);

/// Floating-point roots via companion-matrix eigenvalues. Requires degree >= 1.
std::vector<std::complex<double>> roots_float(const Poly& p);

}  // namespace daectl
