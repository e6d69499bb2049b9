#include "quatsurf/qmat.hpp"

#include <algorithm>
#include <vector>

namespace quatsurf {

namespace {

// Dense polynomial in u, v over the Gaussian integers, the coefficient ring
// of the complex adjoint after clearing denominators.
class GaussPoly {
 public:
  GaussPoly() = default;
  GaussPoly(int du, int dv) : du_(du), dv_(dv), re_(cells(du, dv)), im_(cells(du, dv)) {}

  static std::size_t cells(int du, int dv) {
    return du < 0 || dv < 0 ? 0 : static_cast<std::size_t>(du + 1) * static_cast<std::size_t>(dv + 1);
  }

  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(dv_ + 1) + static_cast<std::size_t>(b); }

  void add(int a, int b, const Integer& re, const Integer& im) {
    re_[index(a, b)] += re;
    im_[index(a, b)] += im;
  }

  bool is_zero() const {
    for (std::size_t k = 0; k < re_.size(); ++k)
      if (sgn(re_[k]) != 0 || sgn(im_[k]) != 0) return false;
    return true;
  }

  // this += sign * a * b
  void add_product(const GaussPoly& a, const GaussPoly& b, int sign) {
    Integer t;
    for (int a1 = 0; a1 <= a.du_; ++a1)
      for (int b1 = 0; b1 <= a.dv_; ++b1) {
        const auto ia = a.index(a1, b1);
        const Integer& ar = a.re_[ia];
        const Integer& ai = a.im_[ia];
        if (sgn(ar) == 0 && sgn(ai) == 0) continue;
        for (int a2 = 0; a2 <= b.du_; ++a2)
          for (int b2 = 0; b2 <= b.dv_; ++b2) {
            const auto ib = b.index(a2, b2);
            const Integer& br = b.re_[ib];
            const Integer& bi = b.im_[ib];
            if (sgn(br) == 0 && sgn(bi) == 0) continue;
            const auto io = index(a1 + a2, b1 + b2);
            t = ar * br - ai * bi;
            if (sign > 0) re_[io] += t; else re_[io] -= t;
            t = ar * bi + ai * br;
            if (sign > 0) im_[io] += t; else im_[io] -= t;
          }
      }
  }

  int du() const { return du_; }
  int dv() const { return dv_; }

 private:
  int du_ = -1, dv_ = -1;
  std::vector<Integer> re_, im_;
};

using CMat4 = std::array<std::array<GaussPoly, 4>, 4>;

// w + x i + y j + z k  ->  [[w + x i, y + z i], [-y + z i, w - x i]], after
// scaling each quaternionic row by the lcm of its denominators. Scaling a row
// by a nonzero central constant does not change the rank.
CMat4 complex_adjoint(const Mat2& m, int du, int dv) {
  CMat4 out;
  for (auto& row : out)
    for (auto& p : row) p = GaussPoly(du, dv);
  for (int r = 0; r < 2; ++r) {
    Integer lcm_den = 1;
    for (int c = 0; c < 2; ++c)
      for (const auto& [mono, q] : m(r, c).terms())
        for (int k = 0; k < 4; ++k) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q[k].get_den_mpz_t());
    for (int c = 0; c < 2; ++c)
      for (const auto& [mono, q] : m(r, c).terms()) {
        std::array<Integer, 4> z;
        for (int k = 0; k < 4; ++k) z[static_cast<std::size_t>(k)] = q[k].get_num() * (lcm_den / q[k].get_den());
        out[2 * r][2 * c].add(mono.u, mono.v, z[0], z[1]);
        out[2 * r][2 * c + 1].add(mono.u, mono.v, z[2], z[3]);
        out[2 * r + 1][2 * c].add(mono.u, mono.v, -z[2], z[3]);
        out[2 * r + 1][2 * c + 1].add(mono.u, mono.v, z[0], -z[1]);
      }
  }
  return out;
}

}  // namespace

bool Mat2::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](const auto& row) {
    return row[0].is_zero() && row[1].is_zero();
  });
}

int Mat2::max_deg_u() const {
  int d = kNegInf;
  for (const auto& row : e)
    for (const auto& p : row) d = std::max(d, p.deg_u());
  return d;
}

int Mat2::max_deg_v() const {
  int d = kNegInf;
  for (const auto& row : e)
    for (const auto& p : row) d = std::max(d, p.deg_v());
  return d;
}

Mat2 kron(const Vec2& x, const Vec2& y) {
  return {x.e1 * y.e1, x.e1 * y.e2, x.e2 * y.e1, x.e2 * y.e2};
}

bool is_degenerate(const Mat2& m) {
  if (m.is_zero()) return true;
  const int du = std::max(0, m.max_deg_u());
  const int dv = std::max(0, m.max_deg_v());
  const CMat4 a = complex_adjoint(m, du, dv);
  // For each triple of rows, expand the 3x3 minors along the third row using
  // the 2x2 minors of the first two.
  static constexpr int kRowTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  static constexpr int kColTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& rows : kRowTriples) {
    const auto& r0 = a[rows[0]];
    const auto& r1 = a[rows[1]];
    const auto& r2 = a[rows[2]];
    GaussPoly minor2[4][4];
    for (int c0 = 0; c0 < 4; ++c0)
      for (int c1 = c0 + 1; c1 < 4; ++c1) {
        minor2[c0][c1] = GaussPoly(2 * du, 2 * dv);
        minor2[c0][c1].add_product(r0[c0], r1[c1], +1);
        minor2[c0][c1].add_product(r0[c1], r1[c0], -1);
      }
    for (const auto& cols : kColTriples) {
      const int c0 = cols[0], c1 = cols[1], c2 = cols[2];
      GaussPoly det(3 * du, 3 * dv);
      det.add_product(r2[c2], minor2[c0][c1], +1);
      det.add_product(r2[c1], minor2[c0][c2], -1);
      det.add_product(r2[c0], minor2[c1][c2], +1);
      if (!det.is_zero()) return false;
    }
  }
  return true;
}

Mat2 col_op(const Mat2& m, const QPolyUV& x) {
  Mat2 out = m;
  out(0, 0) -= m(0, 1) * x;
  out(1, 0) -= m(1, 1) * x;
  return out;
}

Mat2 swap_rows(const Mat2& m) { return {m(1, 0), m(1, 1), m(0, 0), m(0, 1)}; }

Mat2 swap_cols(const Mat2& m) { return {m(0, 1), m(0, 0), m(1, 1), m(1, 0)}; }

Mat2 conj_transpose(const Mat2& m) {
  return {conj(m(0, 0)), conj(m(1, 0)), conj(m(0, 1)), conj(m(1, 1))};
}

Vec2 conj(const Vec2& v) { return {conj(v.e1), conj(v.e2)}; }

}  // namespace quatsurf
