#pragma once

#include <array>
#include <string>

#include "quatsurf/rational.hpp"

namespace quatsurf {

/// Exact quaternion w + x i + y j + z k over the rationals.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational w) : w_(std::move(w)) {}  // NOLINT: real scalars embed implicitly
  Quaternion(long w) : w_(w) {}                 // NOLINT
  Quaternion(Rational w, Rational x, Rational y, Rational z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  const Rational& w() const { return w_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }

  /// Component by index: 0 -> w, 1 -> x, 2 -> y, 3 -> z.
  const Rational& operator[](int index) const;

  bool is_zero() const;
  bool is_real() const;

  Quaternion conj() const { return {w_, -x_, -y_, -z_}; }
  Rational norm2() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }

  /// conj(q) / norm2(q). Throws ZeroDivision for q = 0.
  Quaternion inverse() const;

  Quaternion operator-() const { return {-w_, -x_, -y_, -z_}; }
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Quaternion& o);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Rational& s, const Quaternion& q) {
    return {s * q.w_, s * q.x_, s * q.y_, s * q.z_};
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }

  std::array<Rational, 4> components() const { return {w_, x_, y_, z_}; }

 private:
  Rational w_, x_, y_, z_;
};

inline Quaternion conj(const Quaternion& q) { return q.conj(); }
inline Quaternion inverse(const Quaternion& q) { return q.inverse(); }
inline bool is_zero(const Quaternion& q) { return q.is_zero(); }

/// Human-readable form such as "1-2i+3j+4/5k".
std::string to_string(const Quaternion& q);

}  // namespace quatsurf
