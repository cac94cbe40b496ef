// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/sos/basis.hpp"

#include "ncagm/errors.hpp"

namespace ncagm::sos {

std::size_t word_count(int n, int max_degree) {
  if (n < 1) throw ParameterError("alphabet must be non-empty");
  if (max_degree < 0) return 0;
  std::size_t total = 0, power = 1;
  for (int k = 0; k <= max_degree; ++k) {
    total += power;
    power *= static_cast<std::size_t>(n);
  }
  return total;
}

std::size_t word_index(const poly::Word& w, int n) {
  if (w.max_letter() > n) throw ParameterError("word letter outside the alphabet");
  std::size_t rank = 0;
  for (int l : w.letters()) rank = rank * static_cast<std::size_t>(n) + static_cast<std::size_t>(l - 1);
  return word_count(n, static_cast<int>(w.degree()) - 1) + rank;
}

poly::Word word_at(std::size_t index, int n) {
  if (n < 1) throw ParameterError("alphabet must be non-empty");
  int degree = 0;
  std::size_t power = 1;
  while (index >= power) {
    index -= power;
    power *= static_cast<std::size_t>(n);
    ++degree;
  }
  std::vector<int> letters(degree);
  for (int k = degree - 1; k >= 0; --k) {
    letters[k] = static_cast<int>(index % static_cast<std::size_t>(n)) + 1;
    index /= static_cast<std::size_t>(n);
  }
  return poly::Word(std::move(letters));
}

std::size_t MonomialBasis::index_of(const poly::Word& w) const {
  if (static_cast<int>(w.degree()) > degree || w.max_letter() > alphabet) {
    throw ParameterError("word " + w.to_string() + " is not in the basis");
  }
  return word_index(w, alphabet);
}

MonomialBasis monomial_basis(int n, int d) {
  if (n < 1) throw ParameterError("monomial_basis requires n >= 1");
  if (d < 0) throw ParameterError("monomial_basis requires d >= 0");
  MonomialBasis basis{n, d, {}};
  const std::size_t q = word_count(n, d);
  basis.words.reserve(q);
  for (std::size_t k = 0; k < q; ++k) basis.words.push_back(word_at(k, n));
  return basis;
}

}  // namespace ncagm::sos
