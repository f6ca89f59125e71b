#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "gig/errors.hpp"

namespace gig {

// Exact arbitrary-precision arithmetic. Rational is kept in canonical form
// (reduced, positive denominator) by the backend; equality is exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i) times an integer
  }
  return r;
}

namespace detail {
// Drops redundant leading zeros so cpp_int's string constructor cannot
// mistake them for an octal prefix ("025" would otherwise read as 21).
inline std::string canonical_int_text(std::string t) {
  std::string sign;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    if (t[0] == '-') sign = "-";
    t.erase(0, 1);
  }
  auto nonzero = t.find_first_not_of('0');
  if (nonzero == std::string::npos) t = t.empty() ? "" : "0";
  else t = t.substr(nonzero);
  return sign + t;
}
}  // namespace detail

// Parses "3", "-3/4", "0.25", "2.5e-3", "1e-6" into an exact Rational.
// Decimal and scientific forms are converted exactly (no floating point).
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw input_error("cannot parse rational from '" + std::string(text) + "'");
  };
  std::string s(text);
  if (s.empty()) fail();

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    try {
      Int num(detail::canonical_int_text(s.substr(0, slash)));
      Int den(detail::canonical_int_text(s.substr(slash + 1)));
      if (den == 0) fail();
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      fail();
    }
  }

  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
  std::string digits;
  long frac_len = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_dot) fail();
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      if (seen_dot) ++frac_len;
      seen_digit = true;
    } else {
      fail();
    }
  }
  if (!seen_digit) fail();
  digits = detail::canonical_int_text(digits);
  long exp10 = 0;
  if (i < s.size()) {  // exponent part
    ++i;
    if (i >= s.size()) fail();
    bool eneg = false;
    if (s[i] == '+' || s[i] == '-') eneg = (s[i++] == '-');
    if (i >= s.size()) fail();
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
      exp10 = exp10 * 10 + (s[i] - '0');
      if (exp10 > 100000) fail();
    }
    if (eneg) exp10 = -exp10;
  }

  Int num(digits);
  if (neg) num = -num;
  long shift = exp10 - frac_len;
  Int pow10 = 1;
  for (long k = 0; k < (shift < 0 ? -shift : shift); ++k) pow10 *= 10;
  return shift >= 0 ? Rational(num * pow10) : Rational(num, pow10);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace gig
