#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "pascalgeo/error.hpp"

namespace pascalgeo {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator, so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

inline Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace detail

/// Parses "p" or "p/q" with integer p and positive or negative nonzero q.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::is_integer_literal(text)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(detail::parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer d = detail::parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(detail::parse_integer(num), d);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace pascalgeo
