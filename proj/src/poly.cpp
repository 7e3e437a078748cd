#include "daectl/poly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <ostream>
#include <utility>

#include "daectl/errors.hpp"

namespace daectl {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  const Rational inv = leading().inverse();
  return *this * inv;
}

Rational Poly::operator()(const Rational& x) const { return poly_eval(*this, x); }

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i > 0) os << ", ";
    os << p.coefficients()[i];
  }
  return os << ']';
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const std::vector<Rational>& den = b.coefficients();
  if (rem.size() < den.size()) return {Poly(), a};

  const std::size_t db = den.size() - 1;
  const Rational lead_inv = den.back().inverse();
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Rational f = rem[k] * lead_inv;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * den[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division leaves a remainder");
  return q;
}

Rational poly_eval(const Poly& p, const Rational& x0) {
  Rational acc;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x0;
    acc += c[i];
  }
  return acc;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  Poly a = p.monic();
  Poly b = q.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RatMatrix sylvester(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of zero polynomial undefined");
  const std::size_t n = *p.degree();
  const std::size_t m = *q.degree();
  RatMatrix s(n + m, n + m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i <= n; ++i) s(i + j, j) = p.coeff(i);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= m; ++i) s(i + j, m + j) = q.coeff(i);
  return s;
}

Rational resultant(const Poly& p, const Poly& q) { return det(sylvester(p, q)); }

RatMatrix hurwitz_matrix(const Poly& p) {
  if (p.is_zero()) throw DomainError("Hurwitz matrix of the zero polynomial");
  const std::size_t n = *p.degree();
  RatMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // coefficient index 2j - i + 1, zero outside 0..n
      const std::ptrdiff_t k = 2 * static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(i) + 1;
      if (k >= 0 && k <= static_cast<std::ptrdiff_t>(n)) h(i, j) = p.coeff(static_cast<std::size_t>(k));
    }
  }
  return h;
}

bool hurwitz_stable(const Poly& p) {
  if (p.is_zero()) throw DomainError("stability of the zero polynomial is undefined");
  if (p.is_constant()) return true;

  // Normalize to p0 > 0; then every leading principal minor must be positive.
  const Poly q = p.coeff(0).sign() < 0 ? -p : p;
  for (const auto& c : q.coefficients()) {
    if (c.sign() <= 0) return false;
  }
  const RatMatrix h = hurwitz_matrix(q);
  const std::size_t n = h.rows();
  for (std::size_t d = 1; d <= n; ++d) {
    IndexSelection lead;
    for (std::size_t i = 0; i < d; ++i) lead.rows.push_back(i);
    lead.cols = lead.rows;
    if (minor(h, lead).sign() <= 0) return false;
  }
  return true;
}

std::vector<std::complex<double>> roots_float(const Poly& p) {
  if (p.is_constant()) throw DomainError("roots need a polynomial of degree >= 1");
  const std::size_t n = *p.degree();
  const double lead = p.leading().to_double();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -p.coeff(i).to_double() / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw DomainError("companion eigenvalue iteration did not converge");
  std::vector<std::complex<double>> roots;
  roots.reserve(n);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) roots.push_back(solver.eigenvalues()(i));
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

}  // namespace daectl
