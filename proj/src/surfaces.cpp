#include "quatsurf/surfaces.hpp"

#include <algorithm>

namespace quatsurf {

namespace {

template <std::size_t N>
Rational dot_n(const std::array<Rational, N>& a, const std::array<Rational, N>& b) {
  Rational s;
  for (std::size_t k = 0; k < N; ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

Rational dot(const Point3& a, const Point3& b) { return dot_n(a, b); }
Rational dot(const Point4& a, const Point4& b) { return dot_n(a, b); }

template <std::size_t N>
RationalCircle<N>::RationalCircle(Vec center, Vec e1, Vec e2)
    : center_(std::move(center)), e1_(std::move(e1)), e2_(std::move(e2)) {
  if (sgn(dot_n(e1_, e2_)) != 0) throw Error(ErrorKind::InvalidCircle, "circle axes are not orthogonal");
  const Rational r2 = dot_n(e1_, e1_);
  if (sgn(r2) <= 0 || r2 != dot_n(e2_, e2_))
    throw Error(ErrorKind::InvalidCircle, "circle axes must have equal positive length");
}

template <std::size_t N>
Rational RationalCircle<N>::radius2() const {
  return dot_n(e1_, e1_);
}

template <std::size_t N>
auto RationalCircle<N>::at(const Rational& t) const -> Vec {
  const Rational d = 1 + t * t;
  const Rational c = (1 - t * t) / d;
  const Rational s = 2 * t / d;
  Vec p;
  for (std::size_t k = 0; k < N; ++k) p[k] = center_[k] + c * e1_[k] + s * e2_[k];
  return p;
}

template <std::size_t N>
auto RationalCircle<N>::at_infinity() const -> Vec {
  Vec p;
  for (std::size_t k = 0; k < N; ++k) p[k] = center_[k] - e1_[k];
  return p;
}

template class RationalCircle<3>;
template class RationalCircle<4>;

CircleS3::CircleS3(Vec center, Vec e1, Vec e2)
    : RationalCircle<4>(std::move(center), std::move(e1), std::move(e2)) {
  if (sgn(dot_n(center_, e1_)) != 0 || sgn(dot_n(center_, e2_)) != 0)
    throw Error(ErrorKind::InvalidCircle, "S^3 circle axes must be orthogonal to the center");
  if (dot_n(center_, center_) + radius2() != 1) throw Error(ErrorKind::InvalidCircle, "circle is not on S^3");
}

Quaternion CircleS3::quaternion_at(const Rational& t) const {
  const Vec p = at(t);
  return {p[0], p[1], p[2], p[3]};
}

Quadric4::Quadric4(Matrix q) : q_(std::move(q)) {
  for (int r = 0; r < 5; ++r)
    for (int c = r + 1; c < 5; ++c)
      if (q_[r][c] != q_[c][r]) throw Error(ErrorKind::InvalidQuadric, "quadric matrix is not symmetric");
}

Rational Quadric4::value(const std::array<Rational, 5>& x) const {
  Rational s;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) s += q_[r][c] * x[r] * x[c];
  return s;
}

Quadric4 Quadric4::unit_sphere() {
  Matrix m;
  for (int k = 0; k < 4; ++k) m[k][k] = 1;
  m[4][4] = -1;
  return Quadric4(m);
}

Poly4 Poly4::variable(int index) {
  Poly4 p;
  Exponents e{};
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, 1);
  return p;
}

Poly4 Poly4::constant(const Rational& c) {
  Poly4 p;
  p.add_term({}, c);
  return p;
}

void Poly4::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly4& Poly4::operator+=(const Poly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly4 operator*(const Poly4& a, const Poly4& b) {
  Poly4 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly4::Exponents e;
      for (std::size_t k = 0; k < 4; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly4 operator*(const Rational& s, const Poly4& p) {
  Poly4 r;
  for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
  return r;
}

std::optional<Rational> Poly4::ratio_to(const Poly4& other) const {
  if (other.is_zero()) return is_zero() ? std::optional<Rational>(0) : std::nullopt;
  const auto& [e0, c0] = *other.terms_.begin();
  auto it = terms_.find(e0);
  const Rational s = it == terms_.end() ? Rational(0) : Rational(it->second / c0);
  if (*this == s * other) return s;
  return std::nullopt;
}

DPayload::DPayload(Quadric4 quadric, std::optional<PyTuple> param)
    : quadric_(std::move(quadric)), param_(std::move(param)) {
  if (!param_) return;
  const PyTuple& t = *param_;
  if (!t[4].is_zero() || !is_pythagorean(t))
    throw Error(ErrorKind::InvalidParametrization, "parametrization must be a Pythagorean tuple with X5 = 0");
  // Q(X1, X2, X3, X4, X6) must vanish identically.
  const std::array<const RPolyUV*, 5> coords{&t[0], &t[1], &t[2], &t[3], &t[5]};
  RPolyUV value;
  const auto& q = quadric_.matrix();
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c)
      if (sgn(q[r][c]) != 0) value += q[r][c] * (*coords[r] * *coords[c]);
  if (!value.is_zero())
    throw Error(ErrorKind::InvalidParametrization, "parametrization does not lie on the quadric");
}

char family_letter(Family f) {
  switch (f) {
    case Family::E: return 'e';
    case Family::C: return 'c';
    case Family::D: return 'd';
  }
  return '?';
}

Point3 eval_e(const EPayload& spec, const Rational& u, const Rational& v) {
  const Point3 a = spec.alpha.at(u);
  const Point3 b = spec.beta.at(v);
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Quaternion eval_c(const CPayload& spec, const Rational& u, const Rational& v) {
  return spec.alpha.quaternion_at(u) * spec.beta.quaternion_at(v);
}

Quaternion eval_d(const DPayload& spec, const Rational& u, const Rational& v) {
  if (!spec.param()) throw Error(ErrorKind::MissingParametrization, "family D surface has no parametrization");
  const auto p = tuple_to_sphere_map(*spec.param(), u, v);
  return {p[0], p[1], p[2], p[3]};
}

Point3 stereo(const Quaternion& q) {
  const Rational d = 1 - q.w();
  if (sgn(d) == 0) throw Error(ErrorKind::PolePoint, "stereographic projection of the pole");
  return {q.x() / d, q.y() / d, q.z() / d};
}

Quaternion stereo_inv(const Point3& p) {
  const Rational n = dot(p, p);
  const Rational d = n + 1;
  return {(n - 1) / d, 2 * p[0] / d, 2 * p[1] / d, 2 * p[2] / d};
}

Poly4 cyclide_implicit(const Quadric4& q) {
  const Poly4 x = Poly4::variable(0), y = Poly4::variable(1), z = Poly4::variable(2), w = Poly4::variable(3);
  const Poly4 r2 = x * x + y * y + z * z;
  const Poly4 w2 = w * w;
  const Rational two(2);
  const std::array<Poly4, 5> lift{r2 + Rational(-1) * w2, two * (x * w), two * (y * w), two * (z * w), r2 + w2};
  Poly4 out;
  const auto& m = q.matrix();
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c)
      if (sgn(m[r][c]) != 0) out += m[r][c] * (lift[r] * lift[c]);
  if (out.is_zero()) throw Error(ErrorKind::DegenerateFamily, "quadric is proportional to the S^3 form");
  return out;
}

Point3 surface_point(const SurfaceSpec& spec, const Rational& u, const Rational& v) {
  switch (spec.family()) {
    case Family::E: return eval_e(std::get<EPayload>(spec.payload), u, v);
    case Family::C: return stereo(eval_c(std::get<CPayload>(spec.payload), u, v));
    case Family::D: return stereo(eval_d(std::get<DPayload>(spec.payload), u, v));
  }
  return {};
}

std::vector<Point3> coordinate_curve(const SurfaceSpec& spec, CurveAxis which, const Rational& fixed,
                                     std::span<const Rational> samples) {
  std::vector<Point3> out;
  out.reserve(samples.size());
  for (const Rational& s : samples)
    out.push_back(which == CurveAxis::U ? surface_point(spec, fixed, s) : surface_point(spec, s, fixed));
  return out;
}

int rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (sgn(rows[k][c]) == 0) continue;
      const Rational f = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

bool is_circle_or_line(std::span<const Point3> points) {
  std::vector<Point3> distinct;
  for (const auto& p : points)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  if (distinct.size() < 5) throw Error(ErrorKind::TooFewPoints, "circle test needs at least 5 distinct points");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(distinct.size());
  for (const auto& p : distinct) rows.push_back({dot(p, p), p[0], p[1], p[2], Rational(1)});
  return rank(std::move(rows)) <= 3;
}

std::vector<Rational> grid_parameters(int n) {
  std::vector<Rational> t;
  if (n < 2) return t;
  for (int k = 0; k < n; ++k) {
    Rational v(2 * (2 * k - (n - 1)), n - 1);
    v.canonicalize();
    t.push_back(v);
  }
  return t;
}

}  // namespace quatsurf
