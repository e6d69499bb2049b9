#pragma once

#include <array>

#include "quatsurf/poly.hpp"

namespace quatsurf {

struct Vec2 {
  QPolyUV e1, e2;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// 2x2 matrix over H[u,v], indexed (row, col) from 0.
struct Mat2 {
  std::array<std::array<QPolyUV, 2>, 2> e;

  Mat2() = default;
  Mat2(QPolyUV m11, QPolyUV m12, QPolyUV m21, QPolyUV m22)
      : e{{{std::move(m11), std::move(m12)}, {std::move(m21), std::move(m22)}}} {}

  const QPolyUV& operator()(int r, int c) const { return e[r][c]; }
  QPolyUV& operator()(int r, int c) { return e[r][c]; }

  bool is_zero() const;
  int max_deg_u() const;
  int max_deg_v() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// result(i, j) = x_i * y_j, with the x-component on the left.
Mat2 kron(const Vec2& x, const Vec2& y);

/// Rows left-linearly dependent over the quotient ring of H[u,v]. Decided by
/// the complex-adjoint embedding: the 4x4 complex image has rank <= 2 iff all
/// of its 3x3 minors vanish.
bool is_degenerate(const Mat2& m);

/// Column 1 <- column 1 - column 2 * x.
Mat2 col_op(const Mat2& m, const QPolyUV& x);

Mat2 swap_rows(const Mat2& m);
Mat2 swap_cols(const Mat2& m);
/// Entrywise conjugate of the transpose; maps kron(x, y) to kron(conj y, conj x).
Mat2 conj_transpose(const Mat2& m);

Vec2 conj(const Vec2& v);

}  // namespace quatsurf
