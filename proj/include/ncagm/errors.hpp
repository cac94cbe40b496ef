// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncagm {

/// Raised when an argument lies outside the documented parameter domain
/// (m > n, out-of-range indices, empty alphabet, dimension mismatches).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Problem data that should be invariant under the symmetric group is not.
class InvarianceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Farkas certificate failed its semidefiniteness re-check.
class InvalidCertificate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncagm
