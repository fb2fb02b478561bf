#include "liecot/rational.hpp"

#include <cctype>

#include "liecot/errors.hpp"

namespace liecot {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(s)) throw ParseError("invalid rational: '" + std::string(s) + "'");
    return Rational(Integer(std::string(s)));
  }
  auto num = s.substr(0, slash);
  auto den = s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw ParseError("invalid rational: '" + std::string(s) + "'");
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace liecot
