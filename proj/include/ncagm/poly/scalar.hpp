// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <charconv>
#include <string>

namespace ncagm {

/// Arbitrary-precision rational used wherever results must be exact.
using Rational = mpq_class;

/// Shortest decimal text that parses back to the same binary64 value.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Exact text for a rational: "p/q", or "p" when q = 1.
inline std::string format_rational(const Rational& v) { return v.get_str(); }

/// Parses "p/q", "p" or a finite decimal such as "-0.125" exactly.
Rational parse_rational(const std::string& text);

namespace poly {

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static bool is_zero(double v) { return v == 0.0; }
  static std::string to_string(double v) { return format_double(v); }
  static double canonical(double v) { return v; }
};

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static std::string to_string(const Rational& v) { return format_rational(v); }
  static Rational canonical(Rational v) {
    v.canonicalize();
    return v;
  }
};

}  // namespace poly
}  // namespace ncagm
