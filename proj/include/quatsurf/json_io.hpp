#pragma once

#include <json.hpp>

#include <string>

#include "quatsurf/pythagorean.hpp"
#include "quatsurf/split.hpp"
#include "quatsurf/surfaces.hpp"

namespace quatsurf::io {

using nlohmann::json;

// Encoders. Rationals are "p/q" strings, quaternions [w, x, y, z],
// polynomials arrays of {"u", "v", "c"} monomials in ascending (u, v) order.
json to_json(const Rational& r);
json to_json(const Quaternion& q);
json to_json(const QPolyUV& p);
json to_json(const RPolyUV& p);
json to_json(const Vec2& v);
json to_json(const Mat2& m);
json to_json(const SplitCertificate& c);
json to_json(const PyTuple& t);
json to_json(const Circle3& c);
json to_json(const CircleS3& c);
json to_json(const Quadric4& q);
json to_json(const SurfaceSpec& s);

// Decoders; every malformed input raises Error(ParseError).
Rational rational_from_json(const json& j);
Quaternion quaternion_from_json(const json& j);
QPolyUV qpoly_from_json(const json& j);
RPolyUV rpoly_from_json(const json& j);
Vec2 vec2_from_json(const json& j);
Mat2 mat2_from_json(const json& j);
SplitCertificate certificate_from_json(const json& j);
PyTuple tuple_from_json(const json& j);
Circle3 circle3_from_json(const json& j);
CircleS3 circle_s3_from_json(const json& j);
Quadric4 quadric_from_json(const json& j);
SurfaceSpec surface_from_json(const json& j);

/// Parses text as JSON, mapping syntax errors to ParseError.
json parse(const std::string& text);
/// Reads and parses a file; IoError when it cannot be opened.
json read_file(const std::string& path);
/// Canonical compact rendering used for every JSON output.
std::string dump(const json& j);

}  // namespace quatsurf::io
