#include "x3top/rational.hpp"

#include <cctype>
#include <limits>

namespace x3top {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view ns = slash == std::string_view::npos ? s : s.substr(0, slash);
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(ns) || !all_digits(ds))
    throw ParseError("malformed rational '" + std::string(text) + "' (expected p/q or integer)");
  Integer n{std::string(ns)}, d{std::string(ds)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Integer floor(const Rational& q) {
  Integer n = num(q), d = den(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil(const Rational& q) {
  Integer f = floor(q);
  return Rational(f) == q ? f : Integer(f + 1);
}

long to_long(const Integer& z) {
  if (z > std::numeric_limits<long>::max() || z < std::numeric_limits<long>::min())
    throw std::overflow_error("integer out of range: " + z.str());
  return z.convert_to<long>();
}

}  // namespace x3top
