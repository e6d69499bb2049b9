#include "quatsurf/json_io.hpp"

#include <fstream>
#include <sstream>

namespace quatsurf::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& expect_array(const json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size) fail(std::string(what) + ": expected an array of " + std::to_string(size));
  return j;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int exponent(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 1'000'000)
    fail("monomial exponents must be non-negative integers");
  return static_cast<int>(j.get<long long>());
}

template <std::size_t N>
json vec_to_json(const std::array<Rational, N>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

template <std::size_t N>
std::array<Rational, N> vec_from_json(const json& j) {
  expect_array(j, N, "vector");
  std::array<Rational, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = rational_from_json(j[k]);
  return out;
}

template <class Poly>
json poly_to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"u", m.u}, {"v", m.v}, {"c", to_json(c)}});
  return out;
}

template <class Poly, class CoeffParser>
Poly poly_from_json(const json& j, CoeffParser coeff) {
  if (!j.is_array()) fail("polynomial: expected an array of monomials");
  Poly p;
  for (const auto& t : j) p.add_term({exponent(field(t, "u")), exponent(field(t, "v"))}, coeff(field(t, "c")));
  return p;
}

template <class Circle>
json circle_to_json(const Circle& c) {
  return {{"center", vec_to_json(c.center())}, {"e1", vec_to_json(c.e1())}, {"e2", vec_to_json(c.e2())}};
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Quaternion& q) { return json::array({to_json(q.w()), to_json(q.x()), to_json(q.y()), to_json(q.z())}); }

json to_json(const QPolyUV& p) { return poly_to_json(p); }
json to_json(const RPolyUV& p) { return poly_to_json(p); }

json to_json(const Vec2& v) { return json::array({to_json(v.e1), to_json(v.e2)}); }

json to_json(const Mat2& m) {
  return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}), json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

json to_json(const SplitCertificate& c) { return {{"x", to_json(c.x)}, {"y", to_json(c.y)}}; }

json to_json(const PyTuple& t) {
  json out = json::array();
  for (const auto& p : t.x) out.push_back(to_json(p));
  return out;
}

json to_json(const Circle3& c) { return circle_to_json(c); }
json to_json(const CircleS3& c) { return circle_to_json(c); }

json to_json(const Quadric4& q) {
  json out = json::array();
  for (const auto& row : q.matrix()) out.push_back(vec_to_json(row));
  return out;
}

json to_json(const SurfaceSpec& s) {
  json out;
  out["family"] = std::string(1, static_cast<char>(family_letter(s.family()) - 'a' + 'A'));
  if (const auto* e = std::get_if<EPayload>(&s.payload)) {
    out["alpha"] = to_json(e->alpha);
    out["beta"] = to_json(e->beta);
  } else if (const auto* c = std::get_if<CPayload>(&s.payload)) {
    out["alpha"] = to_json(c->alpha);
    out["beta"] = to_json(c->beta);
  } else {
    const auto& d = std::get<DPayload>(s.payload);
    out["quadric"] = to_json(d.quadric());
    if (d.param()) out["param"] = to_json(*d.param());
  }
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  fail("rational: expected a \"p/q\" string");
}

Quaternion quaternion_from_json(const json& j) {
  expect_array(j, 4, "quaternion");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

QPolyUV qpoly_from_json(const json& j) { return poly_from_json<QPolyUV>(j, quaternion_from_json); }
RPolyUV rpoly_from_json(const json& j) { return poly_from_json<RPolyUV>(j, rational_from_json); }

Vec2 vec2_from_json(const json& j) {
  expect_array(j, 2, "vector");
  return {qpoly_from_json(j[0]), qpoly_from_json(j[1])};
}

Mat2 mat2_from_json(const json& j) {
  expect_array(j, 2, "matrix");
  expect_array(j[0], 2, "matrix row");
  expect_array(j[1], 2, "matrix row");
  return {qpoly_from_json(j[0][0]), qpoly_from_json(j[0][1]), qpoly_from_json(j[1][0]), qpoly_from_json(j[1][1])};
}

SplitCertificate certificate_from_json(const json& j) {
  return {vec2_from_json(field(j, "x")), vec2_from_json(field(j, "y"))};
}

PyTuple tuple_from_json(const json& j) {
  expect_array(j, 6, "tuple");
  PyTuple t;
  for (int k = 0; k < 6; ++k) t[k] = rpoly_from_json(j[static_cast<std::size_t>(k)]);
  return t;
}

Circle3 circle3_from_json(const json& j) {
  return {vec_from_json<3>(field(j, "center")), vec_from_json<3>(field(j, "e1")), vec_from_json<3>(field(j, "e2"))};
}

CircleS3 circle_s3_from_json(const json& j) {
  return {vec_from_json<4>(field(j, "center")), vec_from_json<4>(field(j, "e1")), vec_from_json<4>(field(j, "e2"))};
}

Quadric4 quadric_from_json(const json& j) {
  expect_array(j, 5, "quadric");
  Quadric4::Matrix m;
  for (std::size_t r = 0; r < 5; ++r) m[r] = vec_from_json<5>(j[r]);
  return Quadric4(m);
}

SurfaceSpec surface_from_json(const json& j) {
  const json& fam = field(j, "family");
  if (!fam.is_string()) fail("family must be a string");
  const std::string f = fam.get<std::string>();
  if (f == "E" || f == "e") return {EPayload{circle3_from_json(field(j, "alpha")), circle3_from_json(field(j, "beta"))}};
  if (f == "C" || f == "c") return {CPayload{circle_s3_from_json(field(j, "alpha")), circle_s3_from_json(field(j, "beta"))}};
  if (f == "D" || f == "d") {
    std::optional<PyTuple> param;
    if (j.contains("param")) param = tuple_from_json(j.at("param"));
    return {DPayload(quadric_from_json(field(j, "quadric")), std::move(param))};
  }
  fail("unknown surface family \"" + f + "\"");
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace quatsurf::io
