#pragma once

// Ring torus with R = 2, r = 1 around the z axis, in the conventions of the
// surfaces module.

#include "quatsurf/surfaces.hpp"
#include "support/generators.hpp"

namespace quatsurf::testing {

/// (2 X4 - X0)^2 - 4 X1^2 - 4 X2^2.
inline Quadric4 torus_quadric() {
  Quadric4::Matrix m;
  m[0][0] = 1;
  m[4][4] = 4;
  m[0][4] = m[4][0] = -2;
  m[1][1] = -4;
  m[2][2] = -4;
  return Quadric4(m);
}

/// (x^2 + y^2 + z^2 + 3 w^2)^2 - 16 (x^2 + y^2) w^2, written out directly.
inline Poly4 torus_quartic() {
  const Poly4 x = Poly4::variable(0), y = Poly4::variable(1), z = Poly4::variable(2), w = Poly4::variable(3);
  const Poly4 s = x * x + y * y + z * z + Rational(3) * (w * w);
  return s * s + Rational(-16) * ((x * x + y * y) * (w * w));
}

/// Rational torus point ((2 + cos b) cos a, (2 + cos b) sin a, sin b) with
/// tan-half-angle parameters.
inline Point3 torus_point(const Rational& ta, const Rational& tb) {
  const Rational ca = (1 - ta * ta) / (1 + ta * ta), sa = 2 * ta / (1 + ta * ta);
  const Rational cb = (1 - tb * tb) / (1 + tb * tb), sb = 2 * tb / (1 + tb * tb);
  const Rational rho = 2 + cb;
  return {rho * ca, rho * sa, sb};
}

/// Lift of torus_point to S^3 as a Pythagorean tuple (x5 = 0):
/// X1 = 4(1+u^2), X2 = (3+v^2)(1-u^2), X3 = 2u(3+v^2), X4 = 2v(1+u^2),
/// X6 = (5+v^2)(1+u^2).
inline PyTuple torus_parametrization() {
  const RPolyUV u = RPolyUV::u(), v = RPolyUV::v(), one(1);
  PyTuple t;
  t[0] = RPolyUV(4) * (one + u * u);
  t[1] = (RPolyUV(3) + v * v) * (one - u * u);
  t[2] = RPolyUV(2) * u * (RPolyUV(3) + v * v);
  t[3] = RPolyUV(2) * v * (one + u * u);
  t[5] = (RPolyUV(5) + v * v) * (one + u * u);
  return t;
}

}  // namespace quatsurf::testing
