#pragma once

#include <compare>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "quatsurf/error.hpp"
#include "quatsurf/quaternion.hpp"
#include "quatsurf/rational.hpp"

namespace quatsurf {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kNegInf = std::numeric_limits<int>::min();

struct Monomial {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator+(Monomial a, Monomial b) { return {a.u + b.u, a.v + b.v}; }
};

/// Sparse polynomial in two central variables u, v. Coefficients may be
/// noncommutative; products keep left-operand coefficients on the left.
/// Zero coefficients are never stored.
template <class Coeff>
class BiPoly {
 public:
  using Terms = std::map<Monomial, Coeff>;

  BiPoly() = default;
  BiPoly(Coeff c) { add_term({0, 0}, std::move(c)); }  // NOLINT: constants embed implicitly
  BiPoly(long c) : BiPoly(Coeff(c)) {}                 // NOLINT

  static BiPoly monomial(Monomial m, Coeff c) {
    BiPoly p;
    p.add_term(m, std::move(c));
    return p;
  }
  static BiPoly u() { return monomial({1, 0}, Coeff(1)); }
  static BiPoly v() { return monomial({0, 1}, Coeff(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int deg_u() const {
    int d = kNegInf;
    for (const auto& [m, c] : terms_) d = std::max(d, m.u);
    return d;
  }
  int deg_v() const {
    int d = kNegInf;
    for (const auto& [m, c] : terms_) d = std::max(d, m.v);
    return d;
  }

  /// Coefficient of u^a v^b (zero when absent).
  Coeff coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }

  /// Coefficient of the largest monomial in (u, v) lexicographic order.
  const Coeff& leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(Monomial m, const Coeff& c) {
    using quatsurf::is_zero;
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  /// Left and right scalar multiplication.
  friend BiPoly operator*(const Coeff& s, const BiPoly& p) {
    BiPoly r;
    for (const auto& [m, c] : p.terms_) r.add_term(m, s * c);
    return r;
  }
  friend BiPoly operator*(const BiPoly& p, const Coeff& s) {
    BiPoly r;
    for (const auto& [m, c] : p.terms_) r.add_term(m, c * s);
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  template <class F>
  BiPoly map_coeffs(F&& f) const {
    BiPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  /// Evaluates with the variables substituted by central scalars.
  template <class Scalar>
  Coeff eval(const Scalar& u0, const Scalar& v0) const {
    Coeff acc;
    for (const auto& [m, c] : terms_) {
      Scalar s = 1;
      for (int e = 0; e < m.u; ++e) s *= u0;
      for (int e = 0; e < m.v; ++e) s *= v0;
      acc += s * c;
    }
    return acc;
  }

 private:
  Terms terms_;
};

using QPolyUV = BiPoly<Quaternion>;
using RPolyUV = BiPoly<Rational>;

template <class Coeff>
bool is_zero(const BiPoly<Coeff>& p) {
  return p.is_zero();
}

/// Dense univariate quaternionic polynomial in a central variable u.
class QPolyU {
 public:
  QPolyU() = default;
  QPolyU(Quaternion c);  // NOLINT: constants embed implicitly
  QPolyU(long c) : QPolyU(Quaternion(c)) {}  // NOLINT
  explicit QPolyU(std::vector<Quaternion> coefficients);

  static QPolyU monomial(int power, Quaternion c);
  static QPolyU u() { return monomial(1, Quaternion(1)); }

  /// Index of the last nonzero coefficient; kNegInf for zero.
  int degree() const { return coeffs_.empty() ? kNegInf : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Quaternion>& coefficients() const { return coeffs_; }
  const Quaternion& leading_coeff() const { return coeffs_.back(); }
  Quaternion coeff(int power) const;

  QPolyU conj() const;

  QPolyU operator-() const;
  QPolyU& operator+=(const QPolyU& o);
  QPolyU& operator-=(const QPolyU& o);
  friend QPolyU operator+(QPolyU a, const QPolyU& b) { return a += b; }
  friend QPolyU operator-(QPolyU a, const QPolyU& b) { return a -= b; }
  friend QPolyU operator*(const QPolyU& a, const QPolyU& b);
  friend bool operator==(const QPolyU& a, const QPolyU& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Quaternion> coeffs_;
};

inline bool is_zero(const QPolyU& p) { return p.is_zero(); }

struct DivRem {
  QPolyU quotient;
  QPolyU remainder;
};

/// a = b * q + r with deg r < deg b. The divisor multiplies the quotient
/// from the left. Throws ZeroDivision when b = 0.
DivRem left_div_rem(const QPolyU& a, const QPolyU& b);

/// a = q * b + r with deg r < deg b. Throws ZeroDivision when b = 0.
DivRem right_div_rem(const QPolyU& a, const QPolyU& b);

// Conversions between the dense univariate and sparse bivariate forms.
QPolyUV to_bivariate(const QPolyU& p);
/// Throws DegreeTooHigh when p depends on v.
QPolyU to_univariate(const QPolyUV& p);

struct VSlices {
  QPolyU linear;    // coefficient of v
  QPolyU constant;  // v-free part
};

/// m = linear * v + constant. Throws DegreeTooHigh when deg_v(m) >= 2.
VSlices v_slices(const QPolyUV& m);
QPolyUV from_slices(const QPolyU& linear, const QPolyU& constant);

/// Coefficientwise conjugation; conj(a * b) = conj(b) * conj(a).
QPolyUV conj(const QPolyUV& p);

/// Embeds a real polynomial; the image is central.
QPolyUV to_quaternionic(const RPolyUV& p);
/// Component 0..3 (1, i, j, k) of each coefficient.
RPolyUV component(const QPolyUV& p, int index);
bool is_real(const QPolyUV& p);
/// Throws NotTupleShaped when some coefficient is not real.
RPolyUV real_part_checked(const QPolyUV& p);

}  // namespace quatsurf
