#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "quatsurf/pythagorean.hpp"
#include "quatsurf/quaternion.hpp"
#include "quatsurf/rational.hpp"

namespace quatsurf {

using Point3 = std::array<Rational, 3>;
using Point4 = std::array<Rational, 4>;

Rational dot(const Point3& a, const Point3& b);
Rational dot(const Point4& a, const Point4& b);

/// Circle through rational points, center + e1 (1-t^2)/(1+t^2) + e2 2t/(1+t^2).
/// Requires e1 . e2 = 0 and |e1|^2 = |e2|^2 > 0 (InvalidCircle otherwise).
template <std::size_t N>
class RationalCircle {
 public:
  using Vec = std::array<Rational, N>;

  RationalCircle(Vec center, Vec e1, Vec e2);

  const Vec& center() const { return center_; }
  const Vec& e1() const { return e1_; }
  const Vec& e2() const { return e2_; }
  Rational radius2() const;

  Vec at(const Rational& t) const;
  /// Limit t -> infinity: center - e1.
  Vec at_infinity() const;

  friend bool operator==(const RationalCircle&, const RationalCircle&) = default;

 protected:
  Vec center_, e1_, e2_;
};

using Circle3 = RationalCircle<3>;

/// Circle on the unit sphere S^3 in H: additionally center . e1 =
/// center . e2 = 0 and |center|^2 + |e1|^2 = 1.
class CircleS3 : public RationalCircle<4> {
 public:
  CircleS3(Vec center, Vec e1, Vec e2);

  Quaternion quaternion_at(const Rational& t) const;
};

/// Quadratic form X^T Q X on (X0..X3, X4), X0..X3 the quaternion
/// coordinates (w, x, y, z) and X4 homogenizing. Must be symmetric.
class Quadric4 {
 public:
  using Matrix = std::array<std::array<Rational, 5>, 5>;

  explicit Quadric4(Matrix q);

  const Matrix& matrix() const { return q_; }
  Rational value(const std::array<Rational, 5>& x) const;

  /// X0^2 + X1^2 + X2^2 + X3^2 - X4^2, the form cutting out S^3.
  static Quadric4 unit_sphere();

  friend bool operator==(const Quadric4&, const Quadric4&) = default;

 private:
  Matrix q_;
};

/// Homogeneous polynomial in (x, y, z, w) with rational coefficients.
class Poly4 {
 public:
  using Exponents = std::array<int, 4>;

  static Poly4 variable(int index);
  static Poly4 constant(const Rational& c);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponents& e, const Rational& c);

  Poly4& operator+=(const Poly4& o);
  friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }
  friend Poly4 operator*(const Poly4& a, const Poly4& b);
  friend Poly4 operator*(const Rational& s, const Poly4& p);
  friend bool operator==(const Poly4&, const Poly4&) = default;

  /// Scalar s with *this == s * other, if one exists.
  std::optional<Rational> ratio_to(const Poly4& other) const;

  template <class Scalar>
  Scalar eval(const std::array<Scalar, 4>& at) const {
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
      Scalar term(c);
      for (int k = 0; k < 4; ++k)
        for (int p = 0; p < e[static_cast<std::size_t>(k)]; ++p) term = term * at[static_cast<std::size_t>(k)];
      acc = acc + term;
    }
    return acc;
  }

 private:
  std::map<Exponents, Rational> terms_;
};

struct EPayload {
  Circle3 alpha, beta;
  friend bool operator==(const EPayload&, const EPayload&) = default;
};

struct CPayload {
  CircleS3 alpha, beta;
  friend bool operator==(const CPayload&, const CPayload&) = default;
};

/// Quadric plus an optional rational parametrization of S^3 ∩ {Q = 0},
/// given as a Pythagorean tuple with X5 = 0 (point = (X1..X4) / X6).
class DPayload {
 public:
  explicit DPayload(Quadric4 quadric, std::optional<PyTuple> param = std::nullopt);

  const Quadric4& quadric() const { return quadric_; }
  const std::optional<PyTuple>& param() const { return param_; }

  friend bool operator==(const DPayload&, const DPayload&) = default;

 private:
  Quadric4 quadric_;
  std::optional<PyTuple> param_;
};

enum class Family { E, C, D };

struct SurfaceSpec {
  std::variant<EPayload, CPayload, DPayload> payload;

  Family family() const { return static_cast<Family>(payload.index()); }

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

char family_letter(Family f);

/// alpha(u) + beta(v).
Point3 eval_e(const EPayload& spec, const Rational& u, const Rational& v);
/// alpha(u) * beta(v) as a quaternion product; always a unit quaternion.
Quaternion eval_c(const CPayload& spec, const Rational& u, const Rational& v);
/// Point of S^3 from the parametrization. Throws MissingParametrization or BasePoint.
Quaternion eval_d(const DPayload& spec, const Rational& u, const Rational& v);

/// (w, x, y, z) -> (x, y, z) / (1 - w). Throws PolePoint when w = 1.
Point3 stereo(const Quaternion& q);
/// (|p|^2 - 1, 2p) / (|p|^2 + 1), on S^3 exactly.
Quaternion stereo_inv(const Point3& p);

/// Quartic in (x, y, z, w) obtained by substituting the homogeneous lift
/// X0 = x^2+y^2+z^2-w^2, (X1, X2, X3) = 2w (x, y, z), X4 = x^2+y^2+z^2+w^2
/// into the quadric. Throws DegenerateFamily when identically zero.
Poly4 cyclide_implicit(const Quadric4& q);

/// Surface point in R^3 at parameters (u, v); projects for C and D.
Point3 surface_point(const SurfaceSpec& spec, const Rational& u, const Rational& v);

enum class CurveAxis { U, V };

/// Points of the curve with `which` held at `fixed` and the other parameter
/// running over `samples`. For C and D each point is stereographically
/// projected (PolePoint propagates).
std::vector<Point3> coordinate_curve(const SurfaceSpec& spec, CurveAxis which, const Rational& fixed,
                                     std::span<const Rational> samples);

/// True iff the points lie on one circle or line (degenerate circle):
/// the rows (|p|^2, x, y, z, 1) have rank <= 3. Duplicates are ignored;
/// throws TooFewPoints with fewer than 5 distinct points.
bool is_circle_or_line(std::span<const Point3> points);

/// Exact rank of a rational matrix by fraction-free row reduction.
int rank(std::vector<std::vector<Rational>> rows);

/// Grid parameters t_k = 2 (2k - (n-1)) / (n-1), k = 0..n-1.
std::vector<Rational> grid_parameters(int n);

}  // namespace quatsurf
