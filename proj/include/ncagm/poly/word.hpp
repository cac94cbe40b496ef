// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ncagm::poly {

/// A monomial X_{i1} X_{i2} ... X_{ik} of the free algebra, stored as its
/// letter sequence. Letters are 1-based; the empty word is the unit monomial.
///
/// The alphabet size is not stored here; containers that know it (polynomials,
/// bases) check letters against it.
///
/// Words are totally ordered graded-lexicographically: shorter words first,
/// ties broken lexicographically with 1 < 2 < ... < n.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters);

  std::size_t degree() const noexcept { return letters_.size(); }
  bool is_unit() const noexcept { return letters_.empty(); }
  std::span<const int> letters() const noexcept { return letters_; }
  int operator[](std::size_t i) const { return letters_[i]; }

  /// Largest letter, 0 for the unit word.
  int max_letter() const noexcept;

  /// Letter order reversed.
  Word transpose() const;

  /// Concatenation.
  friend Word operator*(const Word& lhs, const Word& rhs);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

  /// "1" for the unit word, otherwise "X1*X2*...".
  std::string to_string() const;

 private:
  std::vector<int> letters_;
};

}  // namespace ncagm::poly
