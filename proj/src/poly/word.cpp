// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/poly/word.hpp"

#include <algorithm>

#include "ncagm/errors.hpp"

namespace ncagm::poly {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l < 1) throw ParameterError("word letters must be >= 1");
  }
}

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

int Word::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::transpose() const {
  Word w;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  return w;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word w;
  w.letters_.reserve(lhs.degree() + rhs.degree());
  w.letters_.insert(w.letters_.end(), lhs.letters_.begin(), lhs.letters_.end());
  w.letters_.insert(w.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return w;
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  if (auto c = lhs.letters_.size() <=> rhs.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.letters_.begin(), lhs.letters_.end(),
                                                rhs.letters_.begin(), rhs.letters_.end());
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += '*';
    s += 'X';
    s += std::to_string(letters_[i]);
  }
  return s;
}

}  // namespace ncagm::poly
