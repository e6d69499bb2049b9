#include "quatsurf/pythagorean.hpp"

#include <algorithm>

namespace quatsurf {

namespace {

QPolyUV quaternionic_combination(const PyTuple& t, int sign) {
  QPolyUV out = to_quaternionic(t[0]);
  for (int c = 1; c < 4; ++c) {
    const Quaternion unit = c == 1 ? Quaternion::i() : c == 2 ? Quaternion::j() : Quaternion::k();
    out += to_quaternionic(t[c]) * (sign > 0 ? unit : -unit);
  }
  return out;
}

}  // namespace

int PyTuple::max_deg_u() const {
  int d = kNegInf;
  for (const auto& p : x) d = std::max(d, p.deg_u());
  return d;
}

int PyTuple::max_deg_v() const {
  int d = kNegInf;
  for (const auto& p : x) d = std::max(d, p.deg_v());
  return d;
}

Mat2 tuple_to_matrix(const PyTuple& t) {
  return {to_quaternionic(t[5] - t[4]), quaternionic_combination(t, +1), quaternionic_combination(t, -1),
          to_quaternionic(t[5] + t[4])};
}

PyTuple matrix_to_tuple(const Mat2& m) {
  const RPolyUV top = real_part_checked(m(0, 0));
  const RPolyUV bottom = real_part_checked(m(1, 1));
  if (!(m(1, 0) == conj(m(0, 1))))
    throw Error(ErrorKind::NotTupleShaped, "off-diagonal entries are not mutually conjugate");
  const Rational half(1, 2);
  PyTuple t;
  for (int c = 0; c < 4; ++c) t[c] = component(m(0, 1), c);
  t[4] = half * (bottom - top);
  t[5] = half * (bottom + top);
  return t;
}

bool is_pythagorean(const PyTuple& t) {
  RPolyUV lhs;
  for (int c = 0; c < 5; ++c) lhs += t[c] * t[c];
  return lhs == t[5] * t[5];
}

TupleCheck check_tuple(const PyTuple& t) { return {is_pythagorean(t), is_degenerate(tuple_to_matrix(t))}; }

PyTuple tuple_from_pair(const QPolyUV& a, const QPolyUV& b) {
  const QPolyUV ab = a * b;
  // Both norms are fixed by conjugation, hence real.
  const RPolyUV na = component(a * conj(a), 0);
  const RPolyUV nb = component(b * conj(b), 0);
  const Rational half(1, 2);
  PyTuple t;
  for (int c = 0; c < 4; ++c) t[c] = component(ab, c);
  t[4] = half * (nb - na);
  t[5] = half * (nb + na);
  return t;
}

std::array<Rational, 5> tuple_to_sphere_map(const PyTuple& t, const Rational& u0, const Rational& v0) {
  const Rational denom = t[5].eval(u0, v0);
  if (sgn(denom) == 0) throw Error(ErrorKind::BasePoint, "X6 vanishes at the requested parameters");
  std::array<Rational, 5> out;
  for (int c = 0; c < 5; ++c) out[static_cast<std::size_t>(c)] = t[c].eval(u0, v0) / denom;
  return out;
}

}  // namespace quatsurf
