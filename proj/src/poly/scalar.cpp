// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/poly/scalar.hpp"

#include <cctype>

#include "ncagm/errors.hpp"
#include "ncagm/poly/polynomial.hpp"

namespace ncagm {

Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParameterError("empty rational literal");

  if (auto dot = s.find('.'); dot != std::string::npos || s.find_first_of("eE") != std::string::npos) {
    // Finite decimal: mantissa digits with an optional exponent.
    std::string mantissa = s, exponent = "0";
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mantissa = s.substr(0, e);
      exponent = s.substr(e + 1);
    }
    bool negative = !mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+');
    bool minus = !mantissa.empty() && mantissa[0] == '-';
    if (negative) mantissa.erase(0, 1);
    std::string digits;
    long scale = 0;
    bool after_dot = false;
    for (char ch : mantissa) {
      if (ch == '.') {
        if (after_dot) throw ParameterError("malformed decimal '" + text + "'");
        after_dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits += ch;
        if (after_dot) ++scale;
      } else {
        throw ParameterError("malformed decimal '" + text + "'");
      }
    }
    if (digits.empty()) throw ParameterError("malformed decimal '" + text + "'");
    long exp10 = 0;
    try {
      std::size_t used = 0;
      exp10 = std::stol(exponent, &used);
      if (used != exponent.size()) throw ParameterError("malformed exponent in '" + text + "'");
    } catch (const std::logic_error&) {
      throw ParameterError("malformed exponent in '" + text + "'");
    }
    mpz_class num(digits, 10);
    long shift = exp10 - scale;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational r = shift >= 0 ? Rational(num * pow10) : Rational(num, pow10);
    r.canonicalize();
    return minus ? Rational(-r) : r;
  }

  Rational r;
  if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) {
    throw ParameterError("malformed rational '" + text + "'");
  }
  if (sgn(r.get_den()) == 0) throw ParameterError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

namespace poly {

long long falling_factorial(int n, int m) {
  if (m < 0 || m > n) throw ParameterError("falling_factorial requires 0 <= m <= n");
  long long v = 1;
  for (int k = 0; k < m; ++k) v *= n - k;
  return v;
}

}  // namespace poly
}  // namespace ncagm
