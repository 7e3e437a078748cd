#pragma once

#include <cstddef>
#include <optional>

#include "daectl/matrix.hpp"

// Gaussian elimination without row switching and the explicit kernel basis
// it induces. The concept criteria use kernel_basis(); this construction is
// kept for fidelity checks against it.
namespace daectl::gauss {

/// Outcome of running the swap-free elimination on an l x n matrix.
///
/// The elimination runs pivots 0..l-2. It is inside the elimination domain
/// when all of those pivots are nonzero, and inside the restricted domain when,
/// additionally, the final diagonal entry (l-1, l-1) of the result is nonzero.
struct DomainReport {
  bool in_domain = false;
  bool in_restricted_domain = false;
  /// First vanishing pivot; set iff !in_restricted_domain.
  std::optional<std::size_t> failed_pivot;
};

struct EliminationResult {
  RatMatrix reduced;  ///< Valid up to the failing pivot when not in the domain.
  DomainReport report;
};

/// One elimination step on pivot k (0-based): rows 0..k are kept, every row
/// i > k becomes row_i - (E(i,k)/E(k,k)) * row_k.
/// Requires k + 1 < rows; throws PivotError when E(k,k) = 0.
RatMatrix elimination_step(const RatMatrix& e, std::size_t k);

/// Composite of elimination_step for k = 0, ..., rows-2. Requires rows <= cols.
EliminationResult eliminate_without_swaps(const RatMatrix& e);

/// For E in the restricted domain with rows < cols: the cols x (cols - rows)
/// matrix whose i-th column z has z[rows+i] = 1, zeros in the other trailing
/// positions, and leading entries from back substitution on the reduced form.
/// Throws DomainError outside the restricted domain, DimensionError when rows >= cols.
RatMatrix staircase_kernel(const RatMatrix& e);

}  // namespace daectl::gauss
