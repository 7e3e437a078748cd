#pragma once

#include <cstddef>

#include "daectl/matrix.hpp"

namespace daectl {

/// A linear DAE d/dt(Ex) = Ax + Bu with E, A of shape l x n and B of shape l x m.
class DaeTriple {
 public:
  /// Throws DimensionError naming the offending block. All of l, n, m must be >= 1.
  DaeTriple(RatMatrix e, RatMatrix a, RatMatrix b);

  const RatMatrix& E() const noexcept { return e_; }
  const RatMatrix& A() const noexcept { return a_; }
  const RatMatrix& B() const noexcept { return b_; }

  std::size_t l() const noexcept { return e_.rows(); }
  std::size_t n() const noexcept { return e_.cols(); }
  std::size_t m() const noexcept { return b_.cols(); }

  friend bool operator==(const DaeTriple&, const DaeTriple&) = default;

 private:
  RatMatrix e_;
  RatMatrix a_;
  RatMatrix b_;
};

struct Dims {
  std::size_t l = 0;
  std::size_t n = 0;
  std::size_t m = 0;

  friend bool operator==(const Dims&, const Dims&) = default;
};

inline Dims dims_of(const DaeTriple& t) { return {t.l(), t.n(), t.m()}; }

}  // namespace daectl
