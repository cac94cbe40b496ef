// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "ncagm/poly/word.hpp"

namespace ncagm::sos {

/// Number of words of degree <= max_degree over n letters: 1 + n + ... + n^max_degree.
std::size_t word_count(int n, int max_degree);

/// Position of w in the graded-lex enumeration of all words over n letters.
std::size_t word_index(const poly::Word& w, int n);

/// Inverse of word_index.
poly::Word word_at(std::size_t index, int n);

/// The ordered tuple of all words of degree <= d over n letters, in
/// graded-lex order starting with the unit word.
struct MonomialBasis {
  int alphabet = 1;
  int degree = 0;
  std::vector<poly::Word> words;

  std::size_t size() const noexcept { return words.size(); }
  /// Position of w in the basis. Throws ParameterError if w is not a member.
  std::size_t index_of(const poly::Word& w) const;
};

MonomialBasis monomial_basis(int n, int d);

}  // namespace ncagm::sos
