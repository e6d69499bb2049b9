#include "quatsurf/quaternion.hpp"

#include "quatsurf/error.hpp"

namespace quatsurf {

const Rational& Quaternion::operator[](int index) const {
  switch (index) {
    case 0: return w_;
    case 1: return x_;
    case 2: return y_;
    default: return z_;
  }
}

bool Quaternion::is_zero() const { return sgn(w_) == 0 && is_real(); }

bool Quaternion::is_real() const { return sgn(x_) == 0 && sgn(y_) == 0 && sgn(z_) == 0; }

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroDivision, "inverse of the zero quaternion");
  const Rational n = norm2();
  return {w_ / n, -x_ / n, -y_ / n, -z_ / n};
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w_ += o.w_;
  x_ += o.x_;
  y_ += o.y_;
  z_ += o.z_;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w_ -= o.w_;
  x_ -= o.x_;
  y_ -= o.y_;
  z_ -= o.z_;
  return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& o) { return *this = *this * o; }

// Hamilton product.
Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
          a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
          a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
          a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
}

std::string to_string(const Quaternion& q) {
  static constexpr const char* kUnits[] = {"", "i", "j", "k"};
  std::string out;
  for (int c = 0; c < 4; ++c) {
    const Rational& r = q[c];
    if (sgn(r) == 0) continue;
    std::string s = to_string(r);
    if (c > 0 && abs(r) == 1) s = sgn(r) < 0 ? "-" : "";
    if (!out.empty() && (s.empty() || s.front() != '-')) out += '+';
    out += s + kUnits[c];
  }
  return out.empty() ? "0" : out;
}

}  // namespace quatsurf
