#include "quatsurf/rational.hpp"

#include <cctype>

#include "quatsurf/error.hpp"

namespace quatsurf {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw Error(ErrorKind::ParseError, "malformed rational: \"" + std::string(text) + "\"");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator: \"" + std::string(text) + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer num = abs(r.get_num()) * scale;
  const Integer& den = r.get_den();
  // round half away from zero: floor((2*num + den) / (2*den))
  Integer scaled = (2 * num + den) / (2 * den);
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = sgn(r) < 0 && scaled != 0;
  return negative ? "-" + body : body;
}

}  // namespace quatsurf
