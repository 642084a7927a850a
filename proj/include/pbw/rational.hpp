#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pbw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for any malformed user input (indices, rationals, schemas).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

}  // namespace detail

/// Parses "p", "-p" or "p/q" into a normalized rational.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!detail::is_integer_literal(num))
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(num));

  std::string_view den = text.substr(slash + 1);
  if (!detail::is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  Integer d = detail::parse_integer(den);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(detail::parse_integer(num), d);
}

/// "p" for integers, "p/q" otherwise; the denominator is always positive.
inline std::string to_string(const Rational& q) {
  const Integer& d = boost::multiprecision::denominator(q);
  std::string s = boost::multiprecision::numerator(q).str();
  if (d != 1) s += "/" + d.str();
  return s;
}

inline bool is_zero(const Rational& q) { return q == 0; }

}  // namespace pbw
