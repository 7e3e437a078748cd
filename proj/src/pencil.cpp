#include "daectl/pencil.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "daectl/errors.hpp"
#include "daectl/triple.hpp"

namespace daectl {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionError("polynomial matrix entry count does not match its shape");
  refresh_degree_bound();
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged polynomial matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  refresh_degree_bound();
}

PolyMatrix PolyMatrix::linear(const RatMatrix& lead, const RatMatrix& constant) {
  if (lead.rows() != constant.rows() || lead.cols() != constant.cols()) {
    throw DimensionError("linear polynomial matrix needs equally shaped coefficients");
  }
  std::vector<Poly> entries;
  entries.reserve(lead.rows() * lead.cols());
  for (std::size_t i = 0; i < lead.rows(); ++i)
    for (std::size_t j = 0; j < lead.cols(); ++j) entries.emplace_back(Poly({constant(i, j), lead(i, j)}));
  return {lead.rows(), lead.cols(), std::move(entries)};
}

PolyMatrix PolyMatrix::constant(const RatMatrix& m) {
  std::vector<Poly> entries;
  entries.reserve(m.rows() * m.cols());
  for (const auto& e : m.entries()) entries.push_back(Poly::constant(e));
  return {m.rows(), m.cols(), std::move(entries)};
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
  entries_[i * cols_ + j] = std::move(p);
  refresh_degree_bound();
}

void PolyMatrix::refresh_degree_bound() {
  degree_bound_ = 0;
  for (const auto& p : entries_) degree_bound_ = std::max(degree_bound_, p.degree().value_or(0));
}

PolyMatrix hconcat(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  if (lhs.rows() != rhs.rows()) throw DimensionError("hconcat: polynomial blocks have different row counts");
  std::vector<Poly> entries;
  entries.reserve(lhs.rows() * (lhs.cols() + rhs.cols()));
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) entries.push_back(lhs(i, j));
    for (std::size_t j = 0; j < rhs.cols(); ++j) entries.push_back(rhs(i, j));
  }
  return {lhs.rows(), lhs.cols() + rhs.cols(), std::move(entries)};
}

PolyMatrix submatrix(const PolyMatrix& pm, const IndexSelection& sel) {
  for (std::size_t k = 0; k < sel.rows.size(); ++k) {
    if (sel.rows[k] >= pm.rows() || (k > 0 && sel.rows[k] <= sel.rows[k - 1])) throw DomainError("invalid row pick");
  }
  for (std::size_t k = 0; k < sel.cols.size(); ++k) {
    if (sel.cols[k] >= pm.cols() || (k > 0 && sel.cols[k] <= sel.cols[k - 1])) {
      throw DomainError("invalid column pick");
    }
  }
  std::vector<Poly> entries;
  entries.reserve(sel.rows.size() * sel.cols.size());
  for (std::size_t i : sel.rows)
    for (std::size_t j : sel.cols) entries.push_back(pm(i, j));
  return {sel.rows.size(), sel.cols.size(), std::move(entries)};
}

PolyMatrix build_pencil(const DaeTriple& t) {
  return hconcat(PolyMatrix::linear(t.E(), -t.A()), PolyMatrix::constant(t.B()));
}

RatMatrix eval(const PolyMatrix& pm, const Rational& x0) {
  RatMatrix out(pm.rows(), pm.cols());
  for (std::size_t i = 0; i < pm.rows(); ++i)
    for (std::size_t j = 0; j < pm.cols(); ++j) out(i, j) = poly_eval(pm(i, j), x0);
  return out;
}

Poly det(const PolyMatrix& pm) {
  if (pm.rows() != pm.cols()) throw DimensionError("determinant of a non-square polynomial matrix");
  const std::size_t n = pm.rows();
  if (n == 0) return Poly::constant(1);
  if (n == 1) return pm(0, 0);

  std::vector<Poly> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.push_back(pm(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> Poly& { return a[i * n + j]; };

  Poly prev = Poly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k).is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(at(p, j), at(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = exact_div(at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
      }
      at(i, k) = Poly();
    }
    prev = at(k, k);
  }
  return negate ? -at(n - 1, n - 1) : at(n - 1, n - 1);
}

std::size_t generic_rank(const PolyMatrix& pm) {
  const std::size_t full = std::min(pm.rows(), pm.cols());
  if (full == 0) return 0;
  const std::size_t points = pm.degree_bound() * full + 1;
  std::size_t best = 0;
  for (std::size_t k = 0; k < points && best < full; ++k) {
    best = std::max(best, rank(eval(pm, Rational(static_cast<long>(k)))));
  }
  return best;
}

Poly minor_gcd(const PolyMatrix& pm, std::size_t r) {
  if (r > std::min(pm.rows(), pm.cols())) {
    throw DomainError("minor order " + std::to_string(r) + " exceeds the smaller dimension of a " +
                      std::to_string(pm.rows()) + "x" + std::to_string(pm.cols()) + " matrix");
  }
  if (r == 0) return Poly::constant(1);
  Poly g;
  for (const auto& rows : combinations(pm.rows(), r)) {
    for (const auto& cols : combinations(pm.cols(), r)) {
      const Poly m = det(submatrix(pm, {rows, cols}));
      if (m.is_zero()) continue;
      g = poly_gcd(g, m);
      if (g.is_constant()) return g;
    }
  }
  return g;
}

bool rank_everywhere_ge(const PolyMatrix& pm, std::size_t d) {
  if (d == 0) return true;
  const Poly g = minor_gcd(pm, d);
  return !g.is_zero() && g.is_constant();
}

bool rank_on_closed_rhp_ge(const PolyMatrix& pm, std::size_t d) {
  if (d == 0) return true;
  const Poly g = minor_gcd(pm, d);
  if (g.is_zero()) return false;
  return hurwitz_stable(g);
}

}  // namespace daectl
