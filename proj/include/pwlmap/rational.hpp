#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdio>
#include <string>
#include <string_view>

#include "error.hpp"

namespace pwlmap {

/// Exact, always-reduced rational with arbitrary-size numerator and denominator.
/// Expression templates are off so that `auto` and `?:` behave as for builtins.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

inline Rational pow(const Rational& base, int exponent) {
  Rational result{1};
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

/// "p/q" form; integers are written with an explicit "/1".
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Decimal rendering with `digits` significant digits.
inline std::string to_decimal(const Rational& r, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, to_double(r));
  return buf;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int treats a leading zero as an octal prefix.
inline Integer parse_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return Integer{std::string(s)};
}

}  // namespace detail

/// Parses "p/q", "p", or a plain decimal literal such as "-0.85". Decimals are
/// expanded literally (0.85 -> 17/20). Exponent notation is rejected.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return error(errc::parse, "not a rational literal: '" + std::string(text) + "'"); };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) throw fail();
    Integer d = detail::parse_digits(den);
    if (d == 0) throw error(errc::parse, "zero denominator in '" + std::string(text) + "'");
    value = Rational(detail::parse_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if (!whole.empty() && !detail::all_digits(whole)) throw fail();
    if (!frac.empty() && !detail::all_digits(frac)) throw fail();
    Integer scale{1};
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer digits = detail::parse_digits(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = Rational(digits, scale);
  } else {
    if (!detail::all_digits(s)) throw fail();
    value = Rational(detail::parse_digits(s));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace pwlmap
