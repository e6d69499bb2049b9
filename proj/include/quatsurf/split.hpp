#pragma once

#include "quatsurf/qmat.hpp"

namespace quatsurf {

/// kron(x, y) reproduces the matrix it was computed from, exactly.
struct SplitCertificate {
  Vec2 x;
  Vec2 y;

  friend bool operator==(const SplitCertificate&, const SplitCertificate&) = default;
};

/// Statistics from one split run, for tests and benchmarks.
struct SplitTrace {
  int vfree_steps = 0;     // column operations while every entry was v-free
  int vlinear_steps = 0;   // column operations on the v-linear parts
  int fallback_pivots = 0; // times the primary normalization failed to make progress
};

/**
 * Factors a degenerate 2x2 matrix over H[u,v] whose entries have degree at
 * most 1 in v as a Kronecker product.
 *
 * Entries free of v are reduced by left division of one entry by the
 * minimal-degree entry of its row, followed by the column operation
 * col1 <- col1 - col2 * q, until some entry vanishes. When entries depend on
 * v, the same reduction runs on the v-coefficients M1 of M = M1 v + M0 until
 * the v-dependent entries fit on one diagonal. Every row/column swap,
 * conjugate transpose and column operation is logged and undone on the
 * factors, and the returned certificate is checked against the input.
 *
 * Throws PreconditionDegree if some entry has deg_v >= 2, NotDegenerate if
 * the rows are independent, NoProgress if the reduction measure cannot be
 * decreased within the iteration cap.
 */
SplitCertificate split(const Mat2& m, SplitTrace* trace = nullptr);

/// Rescales (x, y) -> (x c, c^-1 y) so that the first nonzero entry of x has
/// leading coefficient 1.
SplitCertificate split_normalize(const SplitCertificate& cert);

bool verify(const SplitCertificate& cert, const Mat2& m);

}  // namespace quatsurf
