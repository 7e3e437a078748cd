#include "daectl/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "daectl/errors.hpp"

namespace daectl {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " needs " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(entries_.size()));
  }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(r * c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(c));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return {r, c, std::move(entries)};
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::unit_column(std::size_t n, std::size_t index) {
  if (index >= n) throw DomainError("unit vector index out of range");
  RatMatrix m(n, 1);
  m(index, 0) = 1;
  return m;
}

RatMatrix RatMatrix::col(std::size_t j) const {
  RatMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(lhs.rows()) + "x" +
                         std::to_string(lhs.cols()) + " by " + std::to_string(rhs.rows()) + "x" +
                         std::to_string(rhs.cols()));
  }
  RatMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

namespace {

void require_same_shape(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix shapes differ");
}

}  // namespace

RatMatrix operator+(const RatMatrix& lhs, const RatMatrix& rhs) {
  require_same_shape(lhs, rhs);
  RatMatrix out = lhs;
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) += rhs(i, j);
  return out;
}

RatMatrix operator-(const RatMatrix& lhs, const RatMatrix& rhs) {
  require_same_shape(lhs, rhs);
  RatMatrix out = lhs;
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) -= rhs(i, j);
  return out;
}

RatMatrix hconcat(std::span<const RatMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].rows() != rows) {
      throw DimensionError("hconcat: block " + std::to_string(b) + " has " +
                           std::to_string(blocks[b].rows()) + " rows, expected " +
                           std::to_string(rows));
    }
    cols += blocks[b].cols();
  }
  RatMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) out(i, offset + j) = block(i, j);
    offset += block.cols();
  }
  return out;
}

RatMatrix hconcat(std::initializer_list<RatMatrix> blocks) {
  return hconcat(std::span<const RatMatrix>(blocks.begin(), blocks.size()));
}

RatMatrix vconcat(std::span<const RatMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].cols() != cols) {
      throw DimensionError("vconcat: block " + std::to_string(b) + " has " +
                           std::to_string(blocks[b].cols()) + " columns, expected " +
                           std::to_string(cols));
    }
    rows += blocks[b].rows();
  }
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (const auto& block : blocks) entries.insert(entries.end(), block.entries().begin(), block.entries().end());
  return {rows, cols, std::move(entries)};
}

RatMatrix vconcat(std::initializer_list<RatMatrix> blocks) {
  return vconcat(std::span<const RatMatrix>(blocks.begin(), blocks.size()));
}

namespace {

void check_pick(const std::vector<std::size_t>& pick, std::size_t bound, const char* what) {
  for (std::size_t k = 0; k < pick.size(); ++k) {
    if (pick[k] >= bound) throw DomainError(std::string(what) + " index out of range");
    if (k > 0 && pick[k] <= pick[k - 1]) throw DomainError(std::string(what) + " pick not strictly increasing");
  }
}

}  // namespace

RatMatrix submatrix(const RatMatrix& m, const IndexSelection& sel) {
  check_pick(sel.rows, m.rows(), "row");
  check_pick(sel.cols, m.cols(), "column");
  RatMatrix out(sel.rows.size(), sel.cols.size());
  for (std::size_t i = 0; i < sel.rows.size(); ++i)
    for (std::size_t j = 0; j < sel.cols.size(); ++j) out(i, j) = m(sel.rows[i], sel.cols[j]);
  return out;
}

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  RatMatrix a = m;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

namespace {

Rational laplace(const RatMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return 1;
  Rational sum = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      const Rational term = m(row, c) * laplace(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      sum += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  return sum;
}

}  // namespace

Rational det_laplace(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return laplace(m, cols, 0);
}

Rational minor(const RatMatrix& m, const IndexSelection& sel) {
  if (sel.rows.size() != sel.cols.size()) throw DimensionError("minor needs equally many rows and columns");
  return det(submatrix(m, sel));
}

std::size_t rank(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  RatMatrix a = m;
  Rational prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_by_minors(const RatMatrix& m) {
  for (std::size_t d = std::min(m.rows(), m.cols()); d > 0; --d) {
    for (const auto& sel : enumerate_selections(m.rows(), m.cols(), d)) {
      if (!det_laplace(submatrix(m, sel)).is_zero()) return d;
    }
  }
  return 0;
}

RowEchelon reduced_row_echelon(const RatMatrix& m) {
  RowEchelon out{m, {}};
  RatMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

RatMatrix kernel_basis(const RatMatrix& m) {
  const std::size_t n = m.cols();
  const RowEchelon rref = reduced_row_echelon(m);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rref.pivot_cols) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RatMatrix k(n, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const std::size_t fc = free_cols[f];
    k(fc, f) = 1;
    for (std::size_t r = 0; r < rref.pivot_cols.size(); ++r) {
      k(rref.pivot_cols[r], f) = -rref.reduced(r, fc);
    }
  }
  return k;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RowEchelon rref = reduced_row_echelon(hconcat({m, RatMatrix::identity(n)}));
  if (rref.pivot_cols.size() < n || (n > 0 && rref.pivot_cols[n - 1] != n - 1)) {
    throw DomainError("matrix is singular");
  }
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rref.reduced(i, n + j);
  return inv;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  if (d > n) return out;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    // advance the rightmost position that can still move
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == n - d + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<IndexSelection> enumerate_selections(std::size_t rows, std::size_t cols, std::size_t d) {
  if (d > std::min(rows, cols)) {
    throw DomainError("selection order " + std::to_string(d) + " exceeds min(" + std::to_string(rows) +
                      ", " + std::to_string(cols) + ")");
  }
  const auto row_picks = combinations(rows, d);
  const auto col_picks = combinations(cols, d);
  std::vector<IndexSelection> out;
  out.reserve(row_picks.size() * col_picks.size());
  for (const auto& rp : row_picks)
    for (const auto& cp : col_picks) out.push_back({rp, cp});
  return out;
}

}  // namespace daectl
