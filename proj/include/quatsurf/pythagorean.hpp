#pragma once

#include <array>

#include "quatsurf/qmat.hpp"

namespace quatsurf {

/// Six real polynomials X1..X6 (stored 0-based). Being Pythagorean,
/// X1^2 + ... + X5^2 = X6^2, is a checked predicate, not an invariant.
struct PyTuple {
  std::array<RPolyUV, 6> x;

  const RPolyUV& operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
  RPolyUV& operator[](int i) { return x[static_cast<std::size_t>(i)]; }

  /// Highest deg_u / deg_v over the components.
  int max_deg_u() const;
  int max_deg_v() const;

  friend bool operator==(const PyTuple&, const PyTuple&) = default;
};

/// ((X6 - X5, X1 + i X2 + j X3 + k X4), (X1 - i X2 - j X3 - k X4, X6 + X5))
Mat2 tuple_to_matrix(const PyTuple& t);

/// Inverse of tuple_to_matrix. Throws NotTupleShaped unless the diagonal is
/// real and m21 is the conjugate of m12.
PyTuple matrix_to_tuple(const Mat2& m);

bool is_pythagorean(const PyTuple& t);

struct TupleCheck {
  bool pythagorean;
  bool matrix_degenerate;
};

/// Both the polynomial identity and the degeneracy of the associated matrix.
TupleCheck check_tuple(const PyTuple& t);

/// Tuple whose matrix is kron((a, conj b), (conj a, b)):
/// X1..X4 = components of a b, X5 = (b conj(b) - a conj(a)) / 2,
/// X6 = (b conj(b) + a conj(a)) / 2.
PyTuple tuple_from_pair(const QPolyUV& a, const QPolyUV& b);

/// (X1, ..., X5) / X6 at (u0, v0). Throws BasePoint when X6(u0, v0) = 0.
std::array<Rational, 5> tuple_to_sphere_map(const PyTuple& t, const Rational& u0, const Rational& v0);

}  // namespace quatsurf
