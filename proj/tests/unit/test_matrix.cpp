#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "daectl/errors.hpp"
#include "daectl/matrix.hpp"
#include "oracles.hpp"

using daectl::IndexSelection;
using daectl::RatMatrix;
using daectl::Rational;

namespace {

// [e1, 0, e2, 0, e3, 0]
RatMatrix kalman_block() {
  RatMatrix m(3, 6);
  for (std::size_t i = 0; i < 3; ++i) m(i, 2 * i) = 1;
  return m;
}

RatMatrix identity_then_zero(std::size_t l, std::size_t n) {
  return daectl::hconcat({RatMatrix::identity(l), RatMatrix::zeros(l, n - l)});
}

}  // namespace

TEST_CASE("construction") {
  const RatMatrix m{{1, 2, 3}, {4, 5, 6}};
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 2) == 6);
  CHECK(m.transpose()(2, 1) == 6);
  CHECK(RatMatrix(0, 3).empty());
  CHECK_THROWS_AS(RatMatrix(2, 2, std::vector<Rational>(3)), daectl::DimensionError);
  CHECK_THROWS_AS(RatMatrix::from_rows({{1, 2}, {3}}), daectl::DimensionError);
  CHECK_THROWS_AS(RatMatrix::identity(2) * RatMatrix::identity(3), daectl::DimensionError);
}

TEST_CASE("hconcat examples") {
  CHECK(daectl::hconcat({RatMatrix{{1}}, RatMatrix{{2}}, RatMatrix{{3}}}) == RatMatrix{{1, 2, 3}});
  CHECK(daectl::hconcat({RatMatrix::identity(2), RatMatrix(2, 0)}) == RatMatrix::identity(2));
  CHECK(daectl::hconcat({RatMatrix::unit_column(2, 0), RatMatrix::unit_column(2, 1)}) == RatMatrix::identity(2));
  CHECK_THROWS_AS(daectl::hconcat({RatMatrix::identity(2), RatMatrix::identity(3)}), daectl::DimensionError);
  CHECK(daectl::vconcat({RatMatrix{{1, 2}}, RatMatrix{{3, 4}}}) == RatMatrix{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(daectl::vconcat({RatMatrix{{1, 2}}, RatMatrix{{3}}}), daectl::DimensionError);
}

TEST_CASE("submatrix examples") {
  CHECK(daectl::submatrix(RatMatrix::identity(3), {{0, 1}, {0, 1}}) == RatMatrix::identity(2));
  CHECK(daectl::submatrix(kalman_block(), {{0, 1, 2}, {0, 2, 4}}) == RatMatrix::identity(3));
  const RatMatrix empty = daectl::submatrix(kalman_block(), {{}, {}});
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 0);
  CHECK_THROWS_AS(daectl::submatrix(RatMatrix::identity(2), {{0, 2}, {0}}), daectl::DomainError);
  CHECK_THROWS_AS(daectl::submatrix(RatMatrix::identity(3), {{1, 0}, {0, 1}}), daectl::DomainError);
}

TEST_CASE("det examples") {
  CHECK(daectl::det(RatMatrix::identity(4)) == 1);
  CHECK(daectl::det(RatMatrix(0, 0)) == 1);
  CHECK(daectl::det(RatMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(daectl::det(RatMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(daectl::det(RatMatrix{{Rational(1, 2), 1}, {1, Rational(1, 3)}}) == Rational(-5, 6));
  CHECK_THROWS_AS(daectl::det(RatMatrix(2, 3)), daectl::DimensionError);
}

TEST_CASE("minor examples") {
  const RatMatrix m{{1, 2}, {3, 4}};
  CHECK(daectl::minor(m, {{}, {}}) == 1);
  CHECK(daectl::minor(RatMatrix::identity(3), {{0, 1}, {0, 1}}) == 1);
  CHECK(daectl::minor(m, {{0, 1}, {0, 1}}) == -2);
  CHECK_THROWS_AS(daectl::minor(m, {{0, 1}, {0}}), daectl::DimensionError);
}

TEST_CASE("rank examples") {
  CHECK(daectl::rank(identity_then_zero(2, 5)) == 2);
  CHECK(daectl::rank(kalman_block()) == 3);
  CHECK(daectl::rank(RatMatrix(3, 4)) == 0);
  CHECK(daectl::rank(RatMatrix(0, 4)) == 0);
  CHECK(daectl::rank(RatMatrix(4, 0)) == 0);
}

TEST_CASE("kernel_basis examples") {
  const RatMatrix k = daectl::kernel_basis(identity_then_zero(2, 5));
  CHECK(k == daectl::vconcat({RatMatrix::zeros(2, 3), RatMatrix::identity(3)}));
  const RatMatrix trivial = daectl::kernel_basis(RatMatrix::identity(3));
  CHECK(trivial.rows() == 3);
  CHECK(trivial.cols() == 0);
  CHECK(daectl::kernel_basis(RatMatrix(2, 3)) == RatMatrix::identity(3));
  const RatMatrix single = daectl::kernel_basis(RatMatrix{{1, 1}});
  CHECK(single == RatMatrix{{-1}, {1}});
}

TEST_CASE("reduced row echelon") {
  const auto rre = daectl::reduced_row_echelon(RatMatrix{{0, 2, 4}, {1, 1, 1}});
  CHECK(rre.reduced == RatMatrix{{1, 0, -1}, {0, 1, 2}});
  CHECK(rre.pivot_cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("inverse") {
  const RatMatrix m{{2, 1}, {1, 1}};
  CHECK(daectl::inverse(m) * m == RatMatrix::identity(2));
  CHECK_THROWS_AS(daectl::inverse(RatMatrix{{1, 2}, {2, 4}}), daectl::DomainError);
  CHECK_THROWS_AS(daectl::inverse(RatMatrix(2, 3)), daectl::DimensionError);
}

TEST_CASE("enumerate_selections examples") {
  CHECK(daectl::enumerate_selections(2, 2, 1).size() == 4);
  CHECK(daectl::enumerate_selections(3, 3, 3).size() == 1);
  const auto sels = daectl::enumerate_selections(2, 3, 2);
  REQUIRE(sels.size() == 3);
  CHECK(sels[0] == IndexSelection{{0, 1}, {0, 1}});
  CHECK(sels[1] == IndexSelection{{0, 1}, {0, 2}});
  CHECK(sels[2] == IndexSelection{{0, 1}, {1, 2}});
  CHECK(daectl::enumerate_selections(2, 3, 0).size() == 1);
  CHECK_THROWS_AS(daectl::enumerate_selections(2, 3, 3), daectl::DomainError);
}

TEST_CASE("enumerate_selections is lexicographic") {
  const auto sels = daectl::enumerate_selections(3, 4, 2);
  CHECK(sels.size() == 18);
  for (std::size_t k = 1; k < sels.size(); ++k) {
    const auto& a = sels[k - 1];
    const auto& b = sels[k];
    CHECK(std::tie(a.rows, a.cols) < std::tie(b.rows, b.cols));
  }
}

TEST_CASE("property: det agrees with cofactor expansion") {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(0, 4));
    const RatMatrix m = gen.coin() ? gen.int_matrix(n, n, -5, 5) : gen.rational_matrix(n, n, 7);
    const Rational expected = oracle::det_leibniz(m);
    CHECK(daectl::det(m) == expected);
    CHECK(daectl::det_laplace(m) == expected);
  }
}

TEST_CASE("property: rank equals largest nonvanishing minor order") {
  oracle::Gen gen(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(gen.integer(1, 4));
    const std::size_t c = static_cast<std::size_t>(gen.integer(1, 4));
    const RatMatrix m = gen.coin() ? gen.int_matrix(r, c, -2, 2)
                                   : gen.low_rank(r, c, static_cast<std::size_t>(gen.integer(0, 3)));
    CHECK(daectl::rank(m) == oracle::rank_by_minors(m));
  }
}

TEST_CASE("property: rank invariances") {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = static_cast<std::size_t>(gen.integer(1, 5));
    const std::size_t c = static_cast<std::size_t>(gen.integer(1, 5));
    const RatMatrix m = gen.low_rank(r, c, static_cast<std::size_t>(gen.integer(0, 4)));
    const std::size_t base = daectl::rank(m);

    std::vector<std::size_t> rp(r), cp(c);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), gen.engine());
    std::shuffle(cp.begin(), cp.end(), gen.engine());
    RatMatrix permuted(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) permuted(i, j) = m(rp[i], cp[j]);
    CHECK(daectl::rank(permuted) == base);

    RatMatrix scaled = m;
    const std::size_t row = static_cast<std::size_t>(gen.integer(0, static_cast<long>(r) - 1));
    Rational s = gen.rational(9);
    while (s.is_zero()) s = gen.rational(9);
    for (std::size_t j = 0; j < c; ++j) scaled(row, j) *= s;
    CHECK(daectl::rank(scaled) == base);
  }
}

TEST_CASE("property: kernel basis satisfies rank-nullity") {
  oracle::Gen gen(24);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = static_cast<std::size_t>(gen.integer(1, 5));
    const std::size_t c = static_cast<std::size_t>(gen.integer(1, 6));
    const RatMatrix m = gen.low_rank(r, c, static_cast<std::size_t>(gen.integer(0, 4)));
    const RatMatrix k = daectl::kernel_basis(m);
    CHECK(k.rows() == c);
    CHECK(k.cols() == c - daectl::rank(m));
    CHECK(oracle::is_zero_product(m, k));
    CHECK(daectl::rank(k) == k.cols());
  }
}
