#include "daectl/gauss.hpp"

#include <string>

#include "daectl/errors.hpp"

namespace daectl::gauss {

RatMatrix elimination_step(const RatMatrix& e, std::size_t k) {
  if (k + 1 >= e.rows()) {
    throw DomainError("elimination step " + std::to_string(k) + " needs more than " + std::to_string(k + 1) +
                      " rows");
  }
  if (k >= e.cols()) throw DomainError("elimination pivot column out of range");
  if (e(k, k).is_zero()) throw PivotError(k, "zero pivot at diagonal entry " + std::to_string(k));

  RatMatrix out = e;
  const Rational pivot_inv = e(k, k).inverse();
  for (std::size_t i = k + 1; i < e.rows(); ++i) {
    if (e(i, k).is_zero()) continue;
    const Rational f = e(i, k) * pivot_inv;
    for (std::size_t j = 0; j < e.cols(); ++j) out(i, j) -= f * e(k, j);
    out(i, k) = 0;
  }
  return out;
}

EliminationResult eliminate_without_swaps(const RatMatrix& e) {
  if (e.rows() > e.cols()) throw DimensionError("elimination without swaps expects rows <= cols");
  EliminationResult result{e, {}};
  if (e.rows() == 0) {
    result.report.in_domain = result.report.in_restricted_domain = true;
    return result;
  }
  const std::size_t last = e.rows() - 1;
  for (std::size_t k = 0; k < last; ++k) {
    if (result.reduced(k, k).is_zero()) {
      result.report.failed_pivot = k;
      return result;
    }
    result.reduced = elimination_step(result.reduced, k);
  }
  result.report.in_domain = true;
  if (result.reduced(last, last).is_zero()) {
    result.report.failed_pivot = last;
  } else {
    result.report.in_restricted_domain = true;
  }
  return result;
}

RatMatrix staircase_kernel(const RatMatrix& e) {
  const std::size_t l = e.rows();
  const std::size_t n = e.cols();
  if (l >= n) throw DimensionError("staircase kernel needs fewer rows than columns");
  const EliminationResult elim = eliminate_without_swaps(e);
  if (!elim.report.in_restricted_domain) {
    throw DomainError("matrix is outside the swap-free elimination domain (pivot " +
                      std::to_string(*elim.report.failed_pivot) + " vanishes)");
  }
  const RatMatrix& u = elim.reduced;

  RatMatrix z(n, n - l);
  for (std::size_t i = 0; i < n - l; ++i) {
    z(l + i, i) = 1;
    for (std::size_t j = l; j-- > 0;) {
      Rational acc = u(j, l + i);
      for (std::size_t k = j + 1; k < l; ++k) acc += u(j, k) * z(k, i);
      z(j, i) = -acc / u(j, j);
    }
  }
  return z;
}

}  // namespace daectl::gauss
