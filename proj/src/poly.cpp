#include "quatsurf/poly.hpp"

#include <algorithm>

namespace quatsurf {

QPolyU::QPolyU(Quaternion c) {
  coeffs_.push_back(std::move(c));
  trim();
}

QPolyU::QPolyU(std::vector<Quaternion> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPolyU QPolyU::monomial(int power, Quaternion c) {
  if (c.is_zero()) return {};
  std::vector<Quaternion> cs(static_cast<std::size_t>(power) + 1);
  cs.back() = std::move(c);
  return QPolyU(std::move(cs));
}

Quaternion QPolyU::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(power)];
}

void QPolyU::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPolyU QPolyU::conj() const {
  std::vector<Quaternion> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(c.conj());
  return QPolyU(std::move(cs));
}

QPolyU QPolyU::operator-() const {
  std::vector<Quaternion> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(-c);
  return QPolyU(std::move(cs));
}

QPolyU& QPolyU::operator+=(const QPolyU& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QPolyU& QPolyU::operator-=(const QPolyU& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QPolyU operator*(const QPolyU& a, const QPolyU& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Quaternion> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPolyU(std::move(cs));
}

DivRem left_div_rem(const QPolyU& a, const QPolyU& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDivision, "left division by the zero polynomial");
  const Quaternion lead_inv = b.leading_coeff().inverse();
  QPolyU q;
  QPolyU r = a;
  while (r.degree() >= b.degree()) {
    // b * (c u^s) must cancel the leading term of r.
    const QPolyU term = QPolyU::monomial(r.degree() - b.degree(), lead_inv * r.leading_coeff());
    q += term;
    r -= b * term;
  }
  return {std::move(q), std::move(r)};
}

DivRem right_div_rem(const QPolyU& a, const QPolyU& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDivision, "right division by the zero polynomial");
  const Quaternion lead_inv = b.leading_coeff().inverse();
  QPolyU q;
  QPolyU r = a;
  while (r.degree() >= b.degree()) {
    const QPolyU term = QPolyU::monomial(r.degree() - b.degree(), r.leading_coeff() * lead_inv);
    q += term;
    r -= term * b;
  }
  return {std::move(q), std::move(r)};
}

QPolyUV to_bivariate(const QPolyU& p) {
  QPolyUV out;
  const auto& cs = p.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) out.add_term({static_cast<int>(k), 0}, cs[k]);
  return out;
}

QPolyU to_univariate(const QPolyUV& p) {
  if (p.deg_v() > 0) throw Error(ErrorKind::DegreeTooHigh, "polynomial depends on v");
  const int d = p.deg_u();
  if (d == kNegInf) return {};
  std::vector<Quaternion> cs(static_cast<std::size_t>(d) + 1);
  for (const auto& [m, c] : p.terms()) cs[static_cast<std::size_t>(m.u)] = c;
  return QPolyU(std::move(cs));
}

VSlices v_slices(const QPolyUV& m) {
  if (m.deg_v() >= 2) throw Error(ErrorKind::DegreeTooHigh, "v-slices need deg_v <= 1");
  std::vector<Quaternion> lin, con;
  for (const auto& [mono, c] : m.terms()) {
    auto& target = mono.v == 1 ? lin : con;
    const auto idx = static_cast<std::size_t>(mono.u);
    if (target.size() <= idx) target.resize(idx + 1);
    target[idx] = c;
  }
  return {QPolyU(std::move(lin)), QPolyU(std::move(con))};
}

QPolyUV from_slices(const QPolyU& linear, const QPolyU& constant) {
  return to_bivariate(linear) * QPolyUV::v() + to_bivariate(constant);
}

QPolyUV conj(const QPolyUV& p) {
  return p.map_coeffs([](const Quaternion& c) { return c.conj(); });
}

QPolyUV to_quaternionic(const RPolyUV& p) {
  QPolyUV out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, Quaternion(c));
  return out;
}

RPolyUV component(const QPolyUV& p, int index) {
  RPolyUV out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, c[index]);
  return out;
}

bool is_real(const QPolyUV& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.is_real(); });
}

RPolyUV real_part_checked(const QPolyUV& p) {
  if (!is_real(p)) throw Error(ErrorKind::NotTupleShaped, "expected a real polynomial");
  return component(p, 0);
}

}  // namespace quatsurf
